#include "hallforge/error.hpp"
#include "hallforge/presentation.hpp"
#include "text_util.hpp"

#include <sstream>

namespace hallforge {

std::string print_algebra(const Algebra& alg)
{
    std::ostringstream out;
    const Quiver& q = alg.quiver();
    out << "quiver " << q.vertex_count() << '\n';
    out << "field " << alg.base()->p() << '\n';
    for (const auto& a : q.arrows())
        out << "arrow " << a.name << ' ' << a.source + 1 << ' ' << a.target + 1 << '\n';
    for (const auto& rel : alg.relations()) {
        out << "rel";
        for (std::size_t i = 0; i < rel.terms.size(); ++i) {
            const auto& term = rel.terms[i];
            out << (i ? " + " : " ") << term.coeff << '*';
            for (std::size_t k = 0; k < term.path.size(); ++k)
                out << (k ? "." : "") << term.path[k];
        }
        out << '\n';
    }
    return out.str();
}

AlgebraPtr parse_algebra(std::string_view text, std::string name, const BuildOptions& options)
{
    std::optional<Quiver> quiver;
    int p = 0;
    std::vector<Relation> relations;

    int line_no = 0;
    for (const auto& raw : detail::split_lines(text)) {
        ++line_no;
        const auto line = detail::strip_comment(raw);
        const auto tokens = detail::split_ws(line);
        if (tokens.empty())
            continue;
        auto fail = [&](const std::string& what) -> Error {
            return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
        };
        const std::string& kw = tokens[0];
        if (!quiver && kw != "quiver")
            throw fail("expected 'quiver <vertex_count>' first");
        if (kw == "quiver") {
            if (quiver || tokens.size() != 2)
                throw fail("malformed quiver line");
            const int n = detail::parse_int(tokens[1], fail);
            if (n < 1)
                throw fail("vertex count must be positive");
            quiver.emplace(n);
        } else if (kw == "field") {
            if (tokens.size() != 2)
                throw fail("malformed field line");
            p = detail::parse_int(tokens[1], fail);
        } else if (kw == "arrow") {
            if (tokens.size() != 4)
                throw fail("expected 'arrow <name> <source> <target>'");
            const int s = detail::parse_int(tokens[2], fail);
            const int t = detail::parse_int(tokens[3], fail);
            try {
                quiver->add_arrow(tokens[1], s - 1, t - 1);
            } catch (const Error& e) {
                throw fail(e.what());
            }
        } else if (kw == "rel") {
            const auto body = line.substr(line.find("rel") + 3);
            Relation rel;
            std::size_t start = 0;
            while (start <= body.size()) {
                const auto plus = body.find('+', start);
                const auto piece = detail::trim(body.substr(start, plus == std::string::npos ? std::string::npos
                                                                                              : plus - start));
                if (piece.empty())
                    throw fail("empty relation term");
                RelationTerm term;
                std::string path_text = piece;
                if (const auto star = piece.find('*'); star != std::string::npos) {
                    term.coeff = detail::parse_int(detail::trim(piece.substr(0, star)), fail);
                    path_text = detail::trim(piece.substr(star + 1));
                }
                std::size_t pos = 0;
                while (pos <= path_text.size()) {
                    const auto dot = path_text.find('.', pos);
                    auto arrow = path_text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
                    if (arrow.empty())
                        throw fail("empty arrow name in relation");
                    term.path.push_back(std::move(arrow));
                    if (dot == std::string::npos)
                        break;
                    pos = dot + 1;
                }
                rel.terms.push_back(std::move(term));
                if (plus == std::string::npos)
                    break;
                start = plus + 1;
            }
            relations.push_back(std::move(rel));
        } else {
            throw fail("unknown keyword '" + kw + "'");
        }
    }
    if (!quiver)
        throw Error(ErrorCode::ParseError, "missing quiver line");
    if (p == 0)
        throw Error(ErrorCode::ParseError, "missing field line");
    if (!gf::is_prime(p))
        throw Error(ErrorCode::ParseError, "field characteristic " + std::to_string(p) + " is not prime");
    for (const auto& rel : relations)
        for (const auto& term : rel.terms)
            if (term.coeff < 0 || term.coeff >= p)
                throw Error(ErrorCode::ParseError, "relation coefficient outside 0..p-1");
    return build_algebra(std::move(*quiver), gf::make_field(p, 1), std::move(relations), std::move(name), options);
}

} // namespace hallforge
