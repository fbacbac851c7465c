#include "hallforge/error.hpp"
#include "hallforge/repcat.hpp"
#include "text_util.hpp"

#include <sstream>

namespace hallforge {

using gf::Elem;
using gf::Matrix;

std::string print_module(const Rep& m)
{
    std::ostringstream out;
    const gf::FieldCtx& k = *m.field();
    out << "module over " << m.algebra()->name() << '\n';
    out << "field " << k.p() << ' ' << k.degree() << '\n';
    out << "dims";
    for (int d : m.dims())
        out << ' ' << d;
    out << '\n';
    const Quiver& q = m.algebra()->quiver();
    for (int a = 0; a < q.arrow_count(); ++a) {
        out << "mat " << q.arrow(a).name;
        for (Elem e : m.mat(a).entries())
            out << ' ' << k.format(e);
        out << '\n';
    }
    return out.str();
}

Rep parse_module(std::string_view text, const AlgebraPtr& alg, const gf::FieldPtr& field)
{
    const Quiver& q = alg->quiver();
    std::vector<int> dims;
    std::vector<std::optional<Matrix>> mats(q.arrow_count());
    bool have_field = false;

    int line_no = 0;
    for (const auto& raw : detail::split_lines(text)) {
        ++line_no;
        const auto tokens = detail::split_ws(detail::strip_comment(raw));
        if (tokens.empty())
            continue;
        auto fail = [&](const std::string& what) -> Error {
            return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
        };
        const std::string& kw = tokens[0];
        if (kw == "module") {
            if (tokens.size() < 3 || tokens[1] != "over")
                throw fail("expected 'module over <algebra>'");
        } else if (kw == "field") {
            if (tokens.size() != 3)
                throw fail("expected 'field <p> <n>'");
            const int p = detail::parse_int(tokens[1], fail);
            const int n = detail::parse_int(tokens[2], fail);
            if (p != field->p() || n != field->degree())
                throw fail("module field F_" + std::to_string(p) + "^" + std::to_string(n) +
                           " does not match the requested field");
            have_field = true;
        } else if (kw == "dims") {
            if (static_cast<int>(tokens.size()) != alg->vertex_count() + 1)
                throw fail("expected one dimension per vertex");
            dims.clear();
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const int d = detail::parse_int(tokens[i], fail);
                if (d < 0)
                    throw fail("negative dimension");
                dims.push_back(d);
            }
        } else if (kw == "mat") {
            if (dims.empty())
                throw fail("'dims' must precede the matrices");
            if (tokens.size() < 2)
                throw fail("expected 'mat <arrow> <entries>'");
            const int a = q.find_arrow(tokens[1]);
            if (a < 0)
                throw fail("unknown arrow '" + tokens[1] + "'");
            const std::size_t rows = dims[q.arrow(a).target];
            const std::size_t cols = dims[q.arrow(a).source];
            if (tokens.size() - 2 != rows * cols)
                throw fail("arrow " + tokens[1] + " needs " + std::to_string(rows * cols) + " entries");
            std::vector<Elem> entries;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                std::vector<int> coeffs;
                std::size_t start = 0;
                const std::string& tok = tokens[i];
                while (true) {
                    const auto comma = tok.find(',', start);
                    const int c = detail::parse_int(
                        std::string_view(tok).substr(start, comma == std::string::npos ? std::string::npos
                                                                                       : comma - start),
                        fail);
                    if (c < 0 || c >= field->p())
                        throw fail("coefficient outside 0..p-1");
                    coeffs.push_back(c);
                    if (comma == std::string::npos)
                        break;
                    start = comma + 1;
                }
                if (static_cast<int>(coeffs.size()) > field->degree())
                    throw fail("too many coefficients in entry '" + tok + "'");
                entries.push_back(field->from_coeffs(coeffs));
            }
            mats[a] = Matrix(field, rows, cols, std::move(entries));
        } else {
            throw fail("unknown keyword '" + kw + "'");
        }
    }
    if (!have_field)
        throw Error(ErrorCode::ParseError, "missing field line");
    if (dims.empty())
        throw Error(ErrorCode::ParseError, "missing dims line");
    std::vector<Matrix> out;
    for (int a = 0; a < q.arrow_count(); ++a) {
        if (mats[a])
            out.push_back(std::move(*mats[a]));
        else if (dims[q.arrow(a).source] * dims[q.arrow(a).target] == 0)
            out.emplace_back(field, dims[q.arrow(a).target], dims[q.arrow(a).source]);
        else
            throw Error(ErrorCode::ParseError, "missing matrix for arrow " + q.arrow(a).name);
    }
    return Rep(alg, field, std::move(dims), std::move(out));
}

} // namespace hallforge
