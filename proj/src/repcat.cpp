#include "hallforge/repcat.hpp"

#include "hallforge/error.hpp"
#include "hallforge/gf_poly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace hallforge {

using gf::Elem;
using gf::Matrix;

HomBasis hom_basis(const Rep& m, const Rep& n)
{
    require_same_context(m, n);
    const Algebra& alg = *m.algebra();
    const gf::FieldCtx& k = *m.field();
    const int nv = alg.vertex_count();

    // unknown (v, i, j) is entry (i, j) of f_v, an n_v x m_v block
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    const int unknowns = offset[nv];
    HomBasis out;
    if (unknowns == 0)
        return out;

    std::vector<std::vector<Elem>> rows;
    for (int a = 0; a < alg.quiver().arrow_count(); ++a) {
        const int s = alg.quiver().arrow(a).source;
        const int t = alg.quiver().arrow(a).target;
        const Matrix& ma = m.mat(a);
        const Matrix& na = n.mat(a);
        // (N_a f_s - f_t M_a)(i, j) = 0 for i < n_t, j < m_s
        for (int i = 0; i < n.dim(t); ++i)
            for (int j = 0; j < m.dim(s); ++j) {
                std::vector<Elem> row(unknowns, 0);
                for (int kk = 0; kk < n.dim(s); ++kk) {
                    const int u = offset[s] + kk * m.dim(s) + j;
                    row[u] = k.add(row[u], na(i, kk));
                }
                for (int kk = 0; kk < m.dim(t); ++kk) {
                    const int u = offset[t] + i * m.dim(t) + kk;
                    row[u] = k.sub(row[u], ma(kk, j));
                }
                if (std::any_of(row.begin(), row.end(), [](Elem e) { return e != 0; }))
                    rows.push_back(std::move(row));
            }
    }

    std::vector<std::vector<Elem>> kernel;
    if (rows.empty()) {
        for (int u = 0; u < unknowns; ++u) {
            std::vector<Elem> e(unknowns, 0);
            e[u] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        Matrix system(m.field(), rows.size(), unknowns);
        for (std::size_t r = 0; r < rows.size(); ++r)
            std::copy(rows[r].begin(), rows[r].end(), system.row(r).begin());
        kernel = gf::rref(system).kernel_basis;
    }

    for (const auto& vec : kernel) {
        Morphism f;
        for (int v = 0; v < nv; ++v) {
            std::vector<Elem> block(vec.begin() + offset[v], vec.begin() + offset[v + 1]);
            f.emplace_back(m.field(), n.dim(v), m.dim(v), std::move(block));
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Rep& m, const Rep& n)
{
    return hom_basis(m, n).dim();
}

bool basis_contains_iso(const HomBasis& h)
{
    return std::any_of(h.basis.begin(), h.basis.end(), [](const Morphism& f) { return is_isomorphism(f); });
}

namespace {

std::uint64_t power_capped(std::uint64_t base, int exp, std::uint64_t cap)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base)
            return cap + 1;
        r *= base;
    }
    return r;
}

Morphism combination(const std::vector<Morphism>& basis, const std::vector<Elem>& coeffs)
{
    Morphism f = scale(basis[0], coeffs[0]);
    for (std::size_t i = 1; i < basis.size(); ++i)
        if (coeffs[i] != 0)
            f = add(f, scale(basis[i], coeffs[i]));
    return f;
}

// Visits every nonzero coefficient vector in F_q^m (odometer, last fastest)
// until visit returns true.
template <typename Visit>
bool for_each_combination(int q, int m, Visit&& visit)
{
    std::vector<Elem> c(m, 0);
    while (true) {
        int i = m - 1;
        while (i >= 0 && c[i] == q - 1) {
            c[i] = 0;
            --i;
        }
        if (i < 0)
            return false;
        ++c[i];
        if (visit(c))
            return true;
    }
}

std::vector<Matrix> standard_bases(const Rep& m, const std::vector<bool>& keep)
{
    std::vector<Matrix> bases;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v)
        bases.push_back(keep[v] ? Matrix::identity(m.field(), m.dim(v)) : Matrix(m.field(), 0, m.dim(v)));
    return bases;
}

// Splits along connected components of the support, where only arrows with
// a nonzero matrix connect vertices.
std::vector<Rep> component_split(const Rep& m)
{
    const Algebra& alg = *m.algebra();
    const int n = alg.vertex_count();
    std::vector<int> comp(n, -1);
    int first = -1;
    for (int v = 0; v < n; ++v)
        if (m.dim(v) > 0) {
            first = v;
            break;
        }
    if (first < 0)
        return {};
    std::vector<int> stack{first};
    comp[first] = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int a = 0; a < alg.quiver().arrow_count(); ++a) {
            const Arrow& arr = alg.quiver().arrow(a);
            if (m.mat(a).is_zero())
                continue;
            for (const int w : {arr.source == v ? arr.target : -1, arr.target == v ? arr.source : -1})
                if (w >= 0 && comp[w] < 0) {
                    comp[w] = 0;
                    stack.push_back(w);
                }
        }
    }
    std::vector<bool> inside(n), outside(n);
    bool any_outside = false;
    for (int v = 0; v < n; ++v) {
        inside[v] = comp[v] == 0;
        outside[v] = !inside[v];
        any_outside = any_outside || (outside[v] && m.dim(v) > 0);
    }
    if (!any_outside)
        return {};
    return {sub_rep(m, standard_bases(m, inside)), sub_rep(m, standard_bases(m, outside))};
}

// Finds a nontrivial direct sum splitting of M, or returns nullopt when M is
// indecomposable.
std::optional<std::vector<Rep>> find_split(const Rep& m, const Budgets& budgets)
{
    if (auto parts = component_split(m); !parts.empty())
        return parts;
    const HomBasis end = hom_basis(m, m);
    if (end.dim() <= 1)
        return std::nullopt;
    const gf::FieldCtx& k = *m.field();
    const Morphism id = identity_morphism(m);

    for (const auto& f : end.basis) {
        if (auto parts = fitting_split(m, f); !parts.empty())
            return parts;
        for (int lam = 1; lam < k.order(); ++lam)
            if (auto parts = fitting_split(m, add(f, scale(id, k.neg(static_cast<Elem>(lam))))); !parts.empty())
                return parts;
    }
    for (int i = 0; i < end.dim(); ++i)
        for (int j = i + 1; j < end.dim(); ++j)
            if (auto parts = fitting_split(m, add(end.basis[i], end.basis[j])); !parts.empty())
                return parts;

    if (power_capped(k.order(), end.dim(), budgets.idempotent_search) > budgets.idempotent_search)
        throw Error(ErrorCode::Undecidable,
                    "End has dimension " + std::to_string(end.dim()) + " over F_" + std::to_string(k.order()) +
                        "; the exhaustive idempotent search exceeds its budget of " +
                        std::to_string(budgets.idempotent_search));
    std::vector<Rep> found;
    for_each_combination(k.order(), end.dim(), [&](const std::vector<Elem>& c) {
        const Morphism f = combination(end.basis, c);
        if (is_nilpotent(f) || is_isomorphism(f))
            return false;
        found = fitting_split(m, f);
        return !found.empty();
    });
    if (found.empty())
        return std::nullopt;
    return found;
}

void merge_into(Multiset& acc, const Multiset& part)
{
    acc.insert(acc.end(), part.begin(), part.end());
}

Multiset decompose_rec(const Rep& m, const IndecCatalog& catalog, const Budgets& budgets)
{
    if (m.is_zero())
        return {};
    for (int i = 0; i < catalog.size(); ++i) {
        const Rep& x = catalog.entry(i).rep;
        if (x.dims() == m.dims() && basis_contains_iso(hom_basis(x, m)))
            return {i};
    }
    auto parts = find_split(m, budgets);
    if (!parts) {
        std::string dims;
        for (int d : m.dims())
            dims += (dims.empty() ? "" : ",") + std::to_string(d);
        throw Error(ErrorCode::NotInCatalog, "indecomposable summand with dimension vector (" + dims +
                                                 ") is not in the catalog (bound " +
                                                 std::to_string(catalog.dim_bound()) + ")");
    }
    Multiset out;
    for (const auto& part : *parts)
        merge_into(out, decompose_rec(part, catalog, budgets));
    return out;
}

} // namespace

std::vector<Rep> fitting_split(const Rep& m, const Morphism& f)
{
    const int n = m.algebra()->vertex_count();
    std::vector<Matrix> ker(n), img(n);
    bool ker_nonzero = false;
    bool img_nonzero = false;
    for (int v = 0; v < n; ++v) {
        const int d = m.dim(v);
        if (d == 0) {
            ker[v] = Matrix(m.field(), 0, 0);
            img[v] = Matrix(m.field(), 0, 0);
            continue;
        }
        Matrix power = f[v];
        for (int e = 1; e < d; ++e)
            power = power * f[v];
        ker[v] = gf::kernel_rows(power);
        img[v] = gf::column_space(power);
        ker_nonzero = ker_nonzero || ker[v].rows() > 0;
        img_nonzero = img_nonzero || img[v].rows() > 0;
    }
    if (!ker_nonzero || !img_nonzero)
        return {};
    // kernel_rows is not necessarily reduced; sub_rep needs RREF rows
    for (auto& b : ker)
        if (b.rows() > 0)
            b = gf::row_space(b);
    return {sub_rep(m, ker), sub_rep(m, img)};
}

bool is_indecomposable(const Rep& m, const Budgets& budgets)
{
    if (m.is_zero())
        throw Error(ErrorCode::ZeroModule, "the zero module is not indecomposable");
    return !find_split(m, budgets).has_value();
}

Multiset decompose(const Rep& m, const IndecCatalog& catalog, const Budgets& budgets)
{
    if (m.algebra() != catalog.algebra() || m.field() != catalog.field())
        throw Error(ErrorCode::MixedContext, "module and catalog live over different algebras or fields");
    Multiset out = decompose_rec(m, catalog, budgets);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_isomorphic(const Rep& m, const Rep& n, const IndecCatalog* catalog, const Budgets& budgets)
{
    require_same_context(m, n);
    if (m.dims() != n.dims())
        return false;
    if (m.is_zero())
        return true;
    if (catalog && catalog->algebra() == m.algebra() && catalog->field() == m.field()) {
        try {
            return decompose(m, *catalog, budgets) == decompose(n, *catalog, budgets);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotInCatalog && e.code() != ErrorCode::Undecidable)
                throw;
        }
    }
    const HomBasis h = hom_basis(m, n);
    if (basis_contains_iso(h))
        return true;
    if (h.dim() != hom_dim(n, n) || hom_dim(m, m) != hom_dim(n, n) || hom_dim(n, m) != h.dim())
        return false;
    const int q = m.field()->order();
    if (power_capped(q, h.dim(), budgets.idempotent_search) > budgets.idempotent_search)
        throw Error(ErrorCode::Undecidable, "Hom space of dimension " + std::to_string(h.dim()) +
                                                " is too large for an exhaustive isomorphism search");
    return for_each_combination(q, h.dim(), [&](const std::vector<Elem>& c) {
        return is_isomorphism(combination(h.basis, c));
    });
}

int residue_degree(const Rep& m)
{
    if (m.is_zero())
        throw Error(ErrorCode::ZeroModule, "residue degree of the zero module");
    const gf::FieldCtx& k = *m.field();
    const int total = m.total_dim();
    int d = 1;
    for (const auto& f : hom_basis(m, m).basis) {
        Matrix block(m.field(), total, total);
        int off = 0;
        for (const auto& fv : f) {
            for (std::size_t r = 0; r < fv.rows(); ++r)
                for (std::size_t c = 0; c < fv.cols(); ++c)
                    block(off + r, off + c) = fv(r, c);
            off += static_cast<int>(fv.rows());
        }
        const auto mu = gf::poly::minimal_polynomial(block);
        const auto degrees = gf::poly::factor_degrees(k, gf::poly::radical(k, mu));
        if (degrees.size() != 1)
            throw Error(ErrorCode::NotIndecomposable,
                        "an endomorphism has a minimal polynomial with several irreducible factors");
        d = std::lcm(d, degrees.front());
    }
    return d;
}

} // namespace hallforge
