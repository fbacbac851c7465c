#include "hallforge/error.hpp"
#include "hallforge/hall.hpp"

#include <algorithm>
#include <numeric>

namespace hallforge {

using gf::Elem;
using gf::Matrix;

namespace {

// Sources before targets where possible; on a cycle the smallest remaining
// vertex is taken next.
std::vector<int> fill_order(const Quiver& q)
{
    const int n = q.vertex_count();
    std::vector<int> indegree(n, 0);
    for (const auto& a : q.arrows())
        if (a.source != a.target)
            ++indegree[a.target];
    std::vector<bool> done(n, false);
    std::vector<int> order;
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!done[v] && indegree[v] == 0)
                pick = v;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!done[v])
                pick = v;
        done[pick] = true;
        order.push_back(pick);
        for (const auto& a : q.arrows())
            if (a.source == pick && a.source != a.target && !done[a.target])
                --indegree[a.target];
    }
    return order;
}

// Reduces v against RREF rows; true when v lies in their span.
bool in_span(const Matrix& rref_rows, std::vector<Elem> v, const std::vector<int>& pivots)
{
    const gf::FieldCtx& k = *rref_rows.field();
    for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
        const Elem c = v[pivots[r]];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = k.sub(v[j], k.mul(c, rref_rows(r, j)));
    }
    for (Elem e : v)
        if (e != 0)
            return false;
    return true;
}

std::vector<int> pivots_of(const Matrix& rref_rows)
{
    std::vector<int> out;
    for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
        std::size_t c = 0;
        while (rref_rows(r, c) == 0)
            ++c;
        out.push_back(static_cast<int>(c));
    }
    return out;
}

class SubmoduleSearch {
public:
    SubmoduleSearch(const Rep& m, const std::function<void(const std::vector<Matrix>&)>& visit,
                    const Budgets& budgets)
        : m_(m), visit_(visit), budgets_(budgets), order_(fill_order(m.algebra()->quiver())),
          position_(m.algebra()->vertex_count())
    {
        for (std::size_t i = 0; i < order_.size(); ++i)
            position_[order_[i]] = static_cast<int>(i);
        bases_.resize(order_.size());
        pivots_.resize(order_.size());
    }

    void run(const std::vector<int>& sub_dims)
    {
        sub_dims_ = sub_dims;
        assign(0);
    }

private:
    void assign(std::size_t step)
    {
        if (step == order_.size()) {
            visit_(bases_);
            return;
        }
        const int t = order_[step];
        const int d = m_.dim(t);
        const int e = sub_dims_[t];
        const auto& field = m_.field();
        const Quiver& q = m_.algebra()->quiver();

        // images of the already chosen sources must lie in U_t
        Matrix forced(field, 0, d);
        for (int a = 0; a < q.arrow_count(); ++a) {
            const Arrow& arr = q.arrow(a);
            if (arr.target != t || arr.source == t || position_[arr.source] >= static_cast<int>(step))
                continue;
            const Matrix& us = bases_[arr.source];
            for (std::size_t r = 0; r < us.rows(); ++r)
                forced = forced.stacked(Matrix(field, 1, d, m_.mat(a).apply(us.row(r))));
        }
        const Matrix w = forced.rows() > 0 ? gf::row_space(forced) : Matrix(field, 0, d);
        const int wdim = static_cast<int>(w.rows());
        if (wdim > e)
            return;
        const auto wpiv = pivots_of(w);
        std::vector<int> free_cols;
        {
            std::vector<bool> is_piv(d, false);
            for (int c : wpiv)
                is_piv[c] = true;
            for (int c = 0; c < d; ++c)
                if (!is_piv[c])
                    free_cols.push_back(c);
        }

        gf::for_each_subspace(field, d - wdim, e - wdim, [&](const Matrix& sbar) {
            if (++candidates_ > budgets_.candidates)
                throw Error(ErrorCode::BudgetExceeded, "submodule enumeration exceeded " +
                                                           std::to_string(budgets_.candidates) + " candidates");
            Matrix u = w;
            for (std::size_t r = 0; r < sbar.rows(); ++r) {
                Matrix lifted(field, 1, d);
                for (std::size_t c = 0; c < free_cols.size(); ++c)
                    lifted(0, free_cols[c]) = sbar(r, c);
                u = u.stacked(lifted);
            }
            if (u.rows() > 0)
                u = gf::row_space(u);
            else
                u = Matrix(field, 0, d);
            const auto upiv = pivots_of(u);

            // arrows from t to chosen targets (and loops at t)
            for (int a = 0; a < q.arrow_count(); ++a) {
                const Arrow& arr = q.arrow(a);
                if (arr.source != t)
                    continue;
                const bool loop = arr.target == t;
                if (!loop && position_[arr.target] >= static_cast<int>(step))
                    continue;
                const Matrix& ut = loop ? u : bases_[arr.target];
                const auto& piv = loop ? upiv : pivots_[arr.target];
                for (std::size_t r = 0; r < u.rows(); ++r)
                    if (!in_span(ut, m_.mat(a).apply(u.row(r)), piv))
                        return;
            }
            bases_[t] = u;
            pivots_[t] = upiv;
            assign(step + 1);
        });
    }

    const Rep& m_;
    const std::function<void(const std::vector<Matrix>&)>& visit_;
    Budgets budgets_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<int> sub_dims_;
    std::vector<Matrix> bases_;
    std::vector<std::vector<int>> pivots_;
    std::uint64_t candidates_ = 0;
};

void sub_vectors(const std::vector<int>& dims, std::size_t v, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out)
{
    if (v == dims.size()) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= dims[v]; ++e) {
        cur[v] = e;
        sub_vectors(dims, v + 1, cur, out);
    }
}

} // namespace

void for_each_submodule(const Rep& m, const std::function<void(const std::vector<Matrix>&)>& visit,
                        const Budgets& budgets, const std::optional<std::vector<int>>& only_dims)
{
    SubmoduleSearch search(m, visit, budgets);
    if (only_dims) {
        if (only_dims->size() != m.dims().size())
            throw Error(ErrorCode::DimensionError, "submodule dimension vector has the wrong length");
        for (std::size_t v = 0; v < m.dims().size(); ++v)
            if ((*only_dims)[v] < 0 || (*only_dims)[v] > m.dims()[v])
                return;
        search.run(*only_dims);
        return;
    }
    std::vector<std::vector<int>> all;
    std::vector<int> cur(m.dims().size(), 0);
    sub_vectors(m.dims(), 0, cur, all);
    for (const auto& e : all)
        search.run(e);
}

std::vector<std::vector<Matrix>> submodules(const Rep& m, const Budgets& budgets)
{
    std::vector<std::vector<Matrix>> out;
    for_each_submodule(m, [&](const std::vector<Matrix>& b) { out.push_back(b); }, budgets);
    return out;
}

std::uint64_t count_submodules(const Rep& m, const Budgets& budgets)
{
    std::uint64_t n = 0;
    for_each_submodule(m, [&](const std::vector<Matrix>&) { ++n; }, budgets);
    return n;
}

HallTable hall_table(const Rep& m, const IndecCatalog& catalog, const Budgets& budgets)
{
    HallTable table;
    for_each_submodule(
        m,
        [&](const std::vector<Matrix>& bases) {
            const Multiset sub = decompose(sub_rep(m, bases), catalog, budgets);
            const Multiset quo = decompose(quotient_rep(m, bases), catalog, budgets);
            ++table[{quo, sub}];
        },
        budgets);
    return table;
}

std::uint64_t hall_number(const Rep& m, Multiset n, Multiset l, const IndecCatalog& catalog,
                          const Budgets& budgets)
{
    std::sort(n.begin(), n.end());
    std::sort(l.begin(), l.end());
    if (m.algebra() != catalog.algebra() || m.field() != catalog.field())
        throw Error(ErrorCode::MixedContext, "module and catalog live over different algebras or fields");
    const auto dl = dims_of(catalog, l);
    const auto dn = dims_of(catalog, n);
    for (std::size_t v = 0; v < dl.size(); ++v)
        if (dl[v] + dn[v] != m.dims()[v])
            return 0;
    std::uint64_t count = 0;
    for_each_submodule(
        m,
        [&](const std::vector<Matrix>& bases) {
            if (decompose(sub_rep(m, bases), catalog, budgets) == l &&
                decompose(quotient_rep(m, bases), catalog, budgets) == n)
                ++count;
        },
        budgets, dl);
    return count;
}

std::vector<int> conservative_degrees(const IndecCatalog& catalog, int n_max)
{
    std::vector<int> out;
    for (int n = 1; n <= n_max; ++n) {
        bool ok = true;
        for (const auto& e : catalog.entries())
            ok = ok && std::gcd(n, e.residue_degree) == 1;
        if (ok)
            out.push_back(n);
    }
    return out;
}

} // namespace hallforge
