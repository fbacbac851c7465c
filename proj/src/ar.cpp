#include "hallforge/error.hpp"
#include "hallforge/repcat.hpp"

namespace hallforge {

using gf::Elem;
using gf::FieldPtr;
using gf::Matrix;

namespace {

// Generators of M/rad M at vertex t: standard vectors completing a basis of
// rad_t = sum of the images of the arrows ending at t.
std::vector<std::vector<Elem>> top_generators(const Rep& m, int t)
{
    const Algebra& alg = *m.algebra();
    const int d = m.dim(t);
    Matrix images(m.field(), 0, d);
    for (int a = 0; a < alg.quiver().arrow_count(); ++a)
        if (alg.quiver().arrow(a).target == t && m.mat(a).cols() > 0)
            images = images.stacked(m.mat(a).transposed());
    std::vector<bool> pivot(d, false);
    if (images.rows() > 0)
        for (int c : gf::rref(images).pivot_cols)
            pivot[c] = true;
    std::vector<std::vector<Elem>> gens;
    for (int c = 0; c < d; ++c)
        if (!pivot[c]) {
            std::vector<Elem> e(d, 0);
            e[c] = 1;
            gens.push_back(std::move(e));
        }
    return gens;
}

// The map from the sum of projectives P(vertices[c]) sending the c-th
// generator to gens[c], an element of target at vertices[c].
Morphism map_from_projectives(const Rep& target, const std::vector<int>& vertices,
                              const std::vector<std::vector<Elem>>& gens)
{
    const Algebra& alg = *target.algebra();
    Morphism out;
    for (int j = 0; j < alg.vertex_count(); ++j) {
        int cols = 0;
        for (int v : vertices)
            cols += static_cast<int>(alg.path_basis(v, j).size());
        Matrix m(target.field(), target.dim(j), cols);
        int col = 0;
        for (std::size_t c = 0; c < vertices.size(); ++c)
            for (int b : alg.path_basis(vertices[c], j)) {
                const auto image = target.path_action(alg.basis()[b]).apply(gens[c]);
                for (int r = 0; r < target.dim(j); ++r)
                    m(r, col) = image[r];
                ++col;
            }
        out.push_back(std::move(m));
    }
    return out;
}

Rep sum_of(const AlgebraPtr& alg, const FieldPtr& field, const std::vector<int>& vertices,
           Rep (*make)(const AlgebraPtr&, int, FieldPtr))
{
    std::vector<Rep> parts;
    for (int v : vertices)
        parts.push_back(make(alg, v, field));
    return direct_sum(parts, alg, field);
}

void collect_top(const Rep& m, std::vector<int>& vertices, std::vector<std::vector<std::vector<Elem>>>& gens_at)
{
    gens_at.assign(m.algebra()->vertex_count(), {});
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        gens_at[v] = top_generators(m, v);
        for (std::size_t k = 0; k < gens_at[v].size(); ++k)
            vertices.push_back(v);
    }
}

} // namespace

ProjectivePresentation min_projective_presentation(const Rep& m)
{
    if (m.is_zero())
        throw Error(ErrorCode::ZeroModule, "presentation of the zero module");
    const AlgebraPtr& alg = m.algebra();
    const FieldPtr& field = m.field();
    const int n = alg->vertex_count();
    ProjectivePresentation pres;

    std::vector<std::vector<std::vector<Elem>>> top;
    collect_top(m, pres.p0_vertices, top);
    std::vector<std::vector<Elem>> gens0;
    for (const auto& at : top)
        gens0.insert(gens0.end(), at.begin(), at.end());
    pres.p0 = sum_of(alg, field, pres.p0_vertices, projective);
    pres.cover = map_from_projectives(m, pres.p0_vertices, gens0);

    std::vector<Matrix> kernel_bases;
    for (int v = 0; v < n; ++v) {
        Matrix k = gf::kernel_rows(pres.cover[v]);
        kernel_bases.push_back(k.rows() > 0 ? gf::row_space(k) : Matrix(field, 0, pres.p0.dim(v)));
    }
    pres.kernel = sub_rep(pres.p0, kernel_bases);

    // Generators of the kernel, rewritten in P0 coordinates.
    std::vector<std::vector<std::vector<Elem>>> ktop;
    collect_top(pres.kernel, pres.p1_vertices, ktop);
    std::vector<std::vector<Elem>> gens1;
    for (int v = 0; v < n; ++v)
        for (const auto& g : ktop[v]) {
            std::vector<Elem> x(pres.p0.dim(v), 0);
            for (std::size_t i = 0; i < g.size(); ++i)
                for (int c = 0; c < pres.p0.dim(v); ++c)
                    x[c] = field->add(x[c], field->mul(g[i], kernel_bases[v](i, c)));
            gens1.push_back(std::move(x));
        }
    pres.p1 = sum_of(alg, field, pres.p1_vertices, projective);
    pres.relations = map_from_projectives(pres.p0, pres.p1_vertices, gens1);

    for (std::size_t j = 0; j < gens1.size(); ++j) {
        const int vj = pres.p1_vertices[j];
        std::vector<std::vector<Elem>> row;
        std::size_t off = 0;
        for (int vc : pres.p0_vertices) {
            const std::size_t len = alg->path_basis(vc, vj).size();
            row.emplace_back(gens1[j].begin() + off, gens1[j].begin() + off + len);
            off += len;
        }
        pres.lambda.push_back(std::move(row));
    }
    return pres;
}

int ext1_dim(const Rep& m, const Rep& n)
{
    require_same_context(m, n);
    if (m.is_zero() || n.is_zero())
        return 0;
    // 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(K,N) -> Ext^1(M,N) -> 0
    const auto pres = min_projective_presentation(m);
    int hom_p0 = 0;
    for (int v : pres.p0_vertices)
        hom_p0 += n.dim(v);
    return hom_dim(pres.kernel, n) - hom_p0 + hom_dim(m, n);
}

Rep tau(const Rep& m)
{
    if (m.is_zero())
        throw Error(ErrorCode::ZeroModule, "tau of the zero module");
    const AlgebraPtr& alg = m.algebra();
    const FieldPtr& field = m.field();
    const auto pres = min_projective_presentation(m);
    if (pres.p1_vertices.empty())
        return Rep::zero(alg, field);

    const Rep nu1 = sum_of(alg, field, pres.p1_vertices, injective);
    const Rep nu0 = sum_of(alg, field, pres.p0_vertices, injective);
    std::vector<Matrix> kernel_bases;
    for (int u = 0; u < alg->vertex_count(); ++u) {
        // nu of left multiplication by lambda is the transpose of right
        // multiplication by lambda on e_u Lambda.
        Matrix map(field, nu0.dim(u), nu1.dim(u));
        std::size_t col = 0;
        for (std::size_t j = 0; j < pres.p1_vertices.size(); ++j) {
            const int vj = pres.p1_vertices[j];
            const std::size_t width = alg->path_basis(u, vj).size();
            std::size_t row = 0;
            for (std::size_t c = 0; c < pres.p0_vertices.size(); ++c) {
                const int vc = pres.p0_vertices[c];
                const auto paths = alg->path_basis(vc, vj);
                const std::size_t height = alg->path_basis(u, vc).size();
                for (std::size_t k = 0; k < paths.size(); ++k) {
                    const Elem lam = pres.lambda[j][c][k];
                    if (lam == 0)
                        continue;
                    const Matrix r = alg->right_mult_matrix(u, paths[k]).with_field(field);
                    for (std::size_t x = 0; x < height; ++x)
                        for (std::size_t y = 0; y < width; ++y)
                            map(row + x, col + y) = field->add(map(row + x, col + y), field->mul(lam, r(y, x)));
                }
                row += height;
            }
            col += width;
        }
        Matrix k = gf::kernel_rows(map);
        kernel_bases.push_back(k.rows() > 0 ? gf::row_space(k) : Matrix(field, 0, nu1.dim(u)));
    }
    return sub_rep(nu1, kernel_bases);
}

InjectiveEnvelope injective_envelope(const Rep& n)
{
    const AlgebraPtr& alg = n.algebra();
    const FieldPtr& field = n.field();
    const int nv = alg->vertex_count();
    InjectiveEnvelope env;
    std::vector<int> pivot_of_summand;
    for (int i = 0; i < nv; ++i) {
        if (n.dim(i) == 0)
            continue;
        Matrix out(field, 0, n.dim(i));
        for (int a = 0; a < alg->quiver().arrow_count(); ++a)
            if (alg->quiver().arrow(a).source == i && n.mat(a).rows() > 0)
                out = out.stacked(n.mat(a));
        Matrix socle = out.rows() > 0 ? gf::kernel_rows(out) : Matrix::identity(field, n.dim(i));
        if (socle.rows() == 0)
            continue;
        const auto red = gf::rref(socle);
        for (int c : red.pivot_cols) {
            env.vertices.push_back(i);
            pivot_of_summand.push_back(c);
        }
    }
    env.injective = sum_of(alg, field, env.vertices, injective);
    for (int v = 0; v < nv; ++v) {
        Matrix m(field, env.injective.dim(v), n.dim(v));
        std::size_t row = 0;
        for (std::size_t s = 0; s < env.vertices.size(); ++s)
            for (int b : alg->path_basis(v, env.vertices[s])) {
                const Matrix act = n.path_action(alg->basis()[b]);
                for (int c = 0; c < n.dim(v); ++c)
                    m(row, c) = act(pivot_of_summand[s], c);
                ++row;
            }
        env.embedding.push_back(std::move(m));
    }
    return env;
}

int stable_hom_dim(const Rep& n, const Rep& x)
{
    require_same_context(n, x);
    if (n.is_zero() || x.is_zero())
        return 0;
    const HomBasis h = hom_basis(n, x);
    if (h.dim() == 0)
        return 0;
    const auto env = injective_envelope(n);
    const HomBasis g = hom_basis(env.injective, x);
    if (g.dim() == 0)
        return h.dim();
    std::vector<std::vector<Elem>> rows;
    for (const auto& f : g.basis)
        rows.push_back(flatten(compose(f, env.embedding)));
    Matrix span(n.field(), rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        std::copy(rows[r].begin(), rows[r].end(), span.row(r).begin());
    return h.dim() - gf::rank(span);
}

} // namespace hallforge
