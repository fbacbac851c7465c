#include "hallforge/presentation.hpp"

#include "hallforge/error.hpp"

#include <algorithm>
#include <map>

namespace hallforge {

using gf::Elem;
using gf::Matrix;

Quiver::Quiver(int vertex_count) : vertex_count_(vertex_count)
{
    if (vertex_count < 1)
        throw Error(ErrorCode::InvalidArgument, "a quiver needs at least one vertex");
}

int Quiver::add_arrow(std::string name, int source, int target)
{
    if (source < 0 || source >= vertex_count_ || target < 0 || target >= vertex_count_)
        throw Error(ErrorCode::InvalidArgument, "arrow " + name + " has an endpoint outside the quiver");
    if (name.empty() || name.find_first_of(".*+# \t\r\n") != std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "invalid arrow name '" + name + "'");
    if (find_arrow(name) >= 0)
        throw Error(ErrorCode::InvalidArgument, "duplicate arrow name " + name);
    arrows_.push_back({std::move(name), source, target});
    return static_cast<int>(arrows_.size()) - 1;
}

int Quiver::find_arrow(std::string_view name) const
{
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name == name)
            return static_cast<int>(a);
    return -1;
}

bool Quiver::is_acyclic() const
{
    std::vector<int> indegree(vertex_count_, 0);
    for (const auto& a : arrows_)
        ++indegree[a.target];
    std::vector<int> ready;
    for (int v = 0; v < vertex_count_; ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& a : arrows_)
            if (a.source == v && --indegree[a.target] == 0)
                ready.push_back(a.target);
    }
    return seen == vertex_count_;
}

Quiver Quiver::opposite() const
{
    Quiver op(vertex_count_);
    for (const auto& a : arrows_)
        op.add_arrow(a.name, a.target, a.source);
    return op;
}

std::span<const int> Algebra::path_basis(int i, int j) const
{
    return pair_basis_.at(static_cast<std::size_t>(i) * vertex_count() + j);
}

const std::vector<Elem>& Algebra::right_arrow(int b, int a) const
{
    return right_.at(b).at(a);
}

const std::vector<Elem>& Algebra::left_arrow(int a, int b) const
{
    return left_.at(a).at(b);
}

std::vector<Elem> Algebra::normal_form(const Path& path) const
{
    const auto targets = path_basis(path.source, path.target);
    std::vector<Elem> out(targets.size(), 0);
    if (static_cast<int>(path.length()) >= nil_bound_)
        return out;
    auto it = std::lower_bound(columns_.begin(), columns_.end(), path, [](const Path& x, const Path& y) {
        if (x.length() != y.length())
            return x.length() < y.length();
        return x < y;
    });
    if (it == columns_.end() || *it != path)
        throw Error(ErrorCode::InvalidArgument, "not a path of the quiver");
    const int col = static_cast<int>(it - columns_.begin());
    const int row = pivot_row_of_column_[col];
    for (std::size_t k = 0; k < targets.size(); ++k) {
        // basis elements are exactly the non-pivot columns
        const int bcol = static_cast<int>(
            std::lower_bound(columns_.begin(), columns_.end(), basis_[targets[k]],
                             [](const Path& x, const Path& y) {
                                 if (x.length() != y.length())
                                     return x.length() < y.length();
                                 return x < y;
                             }) -
            columns_.begin());
        if (row < 0)
            out[k] = bcol == col ? 1 : 0;
        else
            out[k] = base_->neg(reduced_(row, bcol));
    }
    return out;
}

Matrix Algebra::right_mult_matrix(int u, int b) const
{
    const Path& pb = basis_.at(b);
    const auto from = path_basis(u, pb.source);
    const auto to = path_basis(u, pb.target);
    Matrix m(base_, to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
        Path x = basis_[from[c]];
        x.target = pb.target;
        x.arrows.insert(x.arrows.end(), pb.arrows.begin(), pb.arrows.end());
        const auto coords = normal_form(x);
        for (std::size_t r = 0; r < to.size(); ++r)
            m(r, c) = coords[r];
    }
    return m;
}

namespace {

std::vector<ResolvedRelation> resolve(const Quiver& quiver, const gf::FieldCtx& base,
                                      const std::vector<Relation>& relations)
{
    std::vector<ResolvedRelation> out;
    for (const auto& rel : relations) {
        ResolvedRelation rr;
        bool first = true;
        for (const auto& term : rel.terms) {
            if (term.path.size() < 2)
                throw Error(ErrorCode::NotAdmissible, "relation term of length < 2 is not inside rad^2");
            std::vector<int> arrows;
            for (const auto& nm : term.path) {
                const int a = quiver.find_arrow(nm);
                if (a < 0)
                    throw Error(ErrorCode::InvalidArgument, "unknown arrow " + nm + " in relation");
                if (!arrows.empty() && quiver.arrow(arrows.back()).target != quiver.arrow(a).source)
                    throw Error(ErrorCode::NotAdmissible, "relation term is not a path: arrow " + nm +
                                                              " does not start where the previous ends");
                arrows.push_back(a);
            }
            const int s = quiver.arrow(arrows.front()).source;
            const int t = quiver.arrow(arrows.back()).target;
            if (first) {
                rr.source = s;
                rr.target = t;
                first = false;
            } else if (s != rr.source || t != rr.target) {
                throw Error(ErrorCode::NotAdmissible, "relation terms are not parallel");
            }
            const Elem c = base.from_int(term.coeff);
            if (c != 0)
                rr.terms.emplace_back(c, std::move(arrows));
        }
        if (!rr.terms.empty())
            out.push_back(std::move(rr));
    }
    return out;
}

} // namespace

AlgebraPtr build_algebra(Quiver quiver, gf::FieldPtr base, std::vector<Relation> relations,
                         std::string name, const BuildOptions& options)
{
    if (!base || !base->is_prime_field())
        throw Error(ErrorCode::NotPrimeBase, "algebras are defined over prime fields only");
    if (quiver.vertex_count() < 1)
        throw Error(ErrorCode::InvalidArgument, "empty quiver");

    auto resolved = resolve(quiver, *base, relations);
    const int n = quiver.vertex_count();

    std::size_t max_rel_len = 0;
    for (const auto& rel : relations)
        for (const auto& term : rel.terms)
            max_rel_len = std::max(max_rel_len, term.path.size());
    const int cutoff = options.length_cutoff > 0
                           ? options.length_cutoff
                           : n * (1 + static_cast<int>(max_rel_len)) * 4;

    // levels[l] = all paths of length l, in a deterministic order
    std::vector<std::vector<Path>> levels(1);
    for (int v = 0; v < n; ++v)
        levels[0].push_back({v, v, {}});

    auto extend = [&]() {
        std::vector<Path> next;
        for (const auto& p : levels.back())
            for (int a = 0; a < quiver.arrow_count(); ++a)
                if (quiver.arrow(a).source == p.target) {
                    Path q = p;
                    q.arrows.push_back(a);
                    q.target = quiver.arrow(a).target;
                    next.push_back(std::move(q));
                }
        std::sort(next.begin(), next.end());
        levels.push_back(std::move(next));
    };

    for (int ell = 0; ell <= cutoff; ++ell) {
        while (static_cast<int>(levels.size()) <= ell)
            extend();

        std::vector<Path> columns;
        for (int l = 0; l <= ell; ++l)
            columns.insert(columns.end(), levels[l].begin(), levels[l].end());
        std::map<Path, int> column_of;
        for (std::size_t c = 0; c < columns.size(); ++c)
            column_of.emplace(columns[c], static_cast<int>(c));

        // Generators u.r.v of the ideal, truncated above length ell.
        std::vector<std::vector<Elem>> rows;
        for (const auto& rel : resolved) {
            std::size_t min_len = SIZE_MAX;
            for (const auto& term : rel.terms)
                min_len = std::min(min_len, term.second.size());
            if (static_cast<int>(min_len) > ell)
                continue;
            const int slack = ell - static_cast<int>(min_len);
            for (int lu = 0; lu <= slack; ++lu)
                for (const auto& u : levels[lu]) {
                    if (u.target != rel.source)
                        continue;
                    for (int lv = 0; lv + lu <= slack; ++lv)
                        for (const auto& v : levels[lv]) {
                            if (v.source != rel.target)
                                continue;
                            std::vector<Elem> row(columns.size(), 0);
                            bool nonzero = false;
                            for (const auto& [coeff, arrows] : rel.terms) {
                                if (u.length() + arrows.size() + v.length() > static_cast<std::size_t>(ell))
                                    continue;
                                Path w{u.source, v.target, u.arrows};
                                w.arrows.insert(w.arrows.end(), arrows.begin(), arrows.end());
                                w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
                                const int c = column_of.at(w);
                                row[c] = base->add(row[c], coeff);
                                nonzero = true;
                            }
                            if (nonzero)
                                rows.push_back(std::move(row));
                        }
                }
        }

        Matrix gens(base, rows.size(), columns.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < columns.size(); ++c)
                gens(r, c) = rows[r][c];
        gf::RrefResult red = rows.empty() ? gf::RrefResult{0, gens, {}, {}} : gf::rref(gens);

        std::vector<int> pivot_row(columns.size(), -1);
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
            pivot_row[red.pivot_cols[r]] = static_cast<int>(r);

        bool survivor_at_top = false;
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (static_cast<int>(columns[c].length()) == ell && pivot_row[c] < 0)
                survivor_at_top = true;
        if (survivor_at_top)
            continue;

        auto alg = std::shared_ptr<Algebra>(new Algebra());
        alg->name_ = std::move(name);
        alg->quiver_ = std::move(quiver);
        alg->base_ = base;
        alg->relations_ = std::move(relations);
        alg->resolved_ = std::move(resolved);
        alg->nil_bound_ = ell;
        alg->pair_basis_.assign(static_cast<std::size_t>(n) * n, {});
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (pivot_row[c] >= 0)
                continue;
            const int b = static_cast<int>(alg->basis_.size());
            alg->basis_.push_back(columns[c]);
            auto& bucket = alg->pair_basis_[static_cast<std::size_t>(columns[c].source) * n + columns[c].target];
            alg->local_index_.push_back(static_cast<int>(bucket.size()));
            bucket.push_back(b);
        }
        alg->columns_ = std::move(columns);
        alg->reduced_ = std::move(red.reduced);
        alg->pivot_row_of_column_ = std::move(pivot_row);

        const Quiver& q = alg->quiver_;
        const int nb = alg->total_dim();
        alg->right_.assign(nb, std::vector<std::vector<Elem>>(q.arrow_count()));
        alg->left_.assign(q.arrow_count(), std::vector<std::vector<Elem>>(nb));
        for (int b = 0; b < nb; ++b) {
            const Path& pb = alg->basis_[b];
            for (int a = 0; a < q.arrow_count(); ++a) {
                const Arrow& arr = q.arrow(a);
                if (pb.target == arr.source) {
                    Path w = pb;
                    w.arrows.push_back(a);
                    w.target = arr.target;
                    alg->right_[b][a] = alg->normal_form(w);
                }
                if (arr.target == pb.source) {
                    Path w{arr.source, pb.target, {a}};
                    w.arrows.insert(w.arrows.end(), pb.arrows.begin(), pb.arrows.end());
                    alg->left_[a][b] = alg->normal_form(w);
                }
            }
        }
        return alg;
    }
    throw Error(ErrorCode::InfiniteDimensional,
                "paths of length " + std::to_string(cutoff) +
                    " survive the relations; the algebra looks infinite-dimensional "
                    "(raise BuildOptions::length_cutoff / --length-cutoff if it is not)");
}

AlgebraPtr opposite(const Algebra& alg)
{
    std::vector<Relation> rels;
    for (const auto& rel : alg.relations()) {
        Relation r;
        for (const auto& term : rel.terms) {
            RelationTerm t = term;
            std::reverse(t.path.begin(), t.path.end());
            r.terms.push_back(std::move(t));
        }
        rels.push_back(std::move(r));
    }
    return build_algebra(alg.quiver().opposite(), alg.base(), std::move(rels), alg.name() + "-op");
}

namespace {

Relation rel(std::initializer_list<std::string> path)
{
    return Relation{{RelationTerm{1, std::vector<std::string>(path)}}};
}

} // namespace

std::vector<std::string> preset_names()
{
    return {"hereditary-a2", "hereditary-a3", "ct-a3-cyclic", "ct-a4", "nakayama-cyclic-3-2", "kronecker"};
}

AlgebraPtr preset(std::string_view name, gf::FieldPtr base)
{
    if (name == "hereditary-a2") {
        Quiver q(2);
        q.add_arrow("a", 0, 1);
        return build_algebra(q, base, {}, std::string(name));
    }
    if (name == "hereditary-a3") {
        Quiver q(3);
        q.add_arrow("a", 0, 1);
        q.add_arrow("b", 1, 2);
        return build_algebra(q, base, {}, std::string(name));
    }
    if (name == "ct-a3-cyclic" || name == "nakayama-cyclic-3-2") {
        Quiver q(3);
        q.add_arrow("a", 0, 1);
        q.add_arrow("b", 1, 2);
        q.add_arrow("c", 2, 0);
        return build_algebra(q, base, {rel({"a", "b"}), rel({"b", "c"}), rel({"c", "a"})}, std::string(name));
    }
    if (name == "ct-a4") {
        Quiver q(4);
        q.add_arrow("a", 0, 1);
        q.add_arrow("b", 1, 2);
        q.add_arrow("c", 2, 0);
        q.add_arrow("d", 2, 3);
        return build_algebra(q, base, {rel({"a", "b"}), rel({"b", "c"}), rel({"c", "a"})}, std::string(name));
    }
    if (name == "kronecker") {
        Quiver q(2);
        q.add_arrow("a", 0, 1);
        q.add_arrow("b", 0, 1);
        return build_algebra(q, base, {}, std::string(name));
    }
    throw Error(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

} // namespace hallforge
