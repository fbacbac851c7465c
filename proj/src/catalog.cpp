#include "hallforge/error.hpp"
#include "hallforge/repcat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace hallforge {

using gf::Elem;
using gf::Matrix;

Budgets Budgets::from_env()
{
    Budgets b;
    if (const char* env = std::getenv("HALLFORGE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            b.candidates = v;
    }
    return b;
}

IndecCatalog::IndecCatalog(AlgebraPtr algebra, gf::FieldPtr field, int dim_bound)
    : algebra_(std::move(algebra)), field_(std::move(field)), dim_bound_(dim_bound)
{
}

int IndecCatalog::index_of(std::string_view label) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].label == label)
            return static_cast<int>(i);
    return -1;
}

int IndecCatalog::add_entry(std::string label, Rep rep)
{
    if (rep.algebra() != algebra_ || rep.field() != field_)
        throw Error(ErrorCode::MixedContext, "catalog entry from a different algebra or field");
    if (index_of(label) >= 0)
        throw Error(ErrorCode::InvalidArgument, "duplicate catalog label " + label);
    const int d = residue_degree(rep);
    entries_.push_back({std::move(label), std::move(rep), d});
    return static_cast<int>(entries_.size()) - 1;
}

namespace {

void dim_vectors_rec(int n, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int d = 0; d <= remaining; ++d) {
        cur.push_back(d);
        dim_vectors_rec(n, remaining - d, cur, out);
        cur.pop_back();
    }
}

std::string dims_text(const std::vector<int>& dims)
{
    std::string s;
    for (int d : dims)
        s += (s.empty() ? "" : ",") + std::to_string(d);
    return "(" + s + ")";
}

std::string label_for(const AlgebraPtr& alg, const gf::FieldPtr& field, const Rep& rep)
{
    const int n = alg->vertex_count();
    if (rep.total_dim() == 1)
        for (int v = 0; v < n; ++v)
            if (rep.dim(v) == 1)
                return "S" + std::to_string(v + 1);
    for (int v = 0; v < n; ++v) {
        const Rep p = projective(alg, v, field);
        if (p.dims() == rep.dims() && basis_contains_iso(hom_basis(p, rep)))
            return "P" + std::to_string(v + 1);
    }
    for (int v = 0; v < n; ++v) {
        const Rep i = injective(alg, v, field);
        if (i.dims() == rep.dims() && basis_contains_iso(hom_basis(i, rep)))
            return "I" + std::to_string(v + 1);
    }
    return {};
}

} // namespace

IndecCatalog list_indecomposables(const AlgebraPtr& alg, const gf::FieldPtr& field, int dim_bound,
                                  const Budgets& budgets)
{
    if (field->p() != alg->base()->p())
        throw Error(ErrorCode::CharacteristicMismatch, "catalog field differs in characteristic from the algebra");
    const int n = alg->vertex_count();
    const Quiver& quiver = alg->quiver();
    const int q = field->order();

    std::vector<Rep> classes;
    for (int total = 1; total <= dim_bound; ++total) {
        std::vector<std::vector<int>> dim_vectors;
        std::vector<int> cur;
        dim_vectors_rec(n, total, cur, dim_vectors);
        std::sort(dim_vectors.begin(), dim_vectors.end());

        for (const auto& dims : dim_vectors) {
            int entries = 0;
            for (const auto& arr : quiver.arrows())
                entries += dims[arr.source] * dims[arr.target];
            std::uint64_t count = 1;
            for (int e = 0; e < entries; ++e) {
                if (count > budgets.candidates / q) {
                    count = budgets.candidates + 1;
                    break;
                }
                count *= q;
            }
            if (count > budgets.candidates)
                throw Error(ErrorCode::BudgetExceeded,
                            "dimension vector " + dims_text(dims) + " needs " + std::to_string(q) + "^" +
                                std::to_string(entries) + " candidate tuples, budget " +
                                std::to_string(budgets.candidates));

            std::vector<Rep> found;
            std::vector<Elem> digits(entries, 0);
            while (true) {
                std::vector<Matrix> mats;
                std::size_t pos = 0;
                for (const auto& arr : quiver.arrows()) {
                    const std::size_t r = dims[arr.target];
                    const std::size_t c = dims[arr.source];
                    mats.emplace_back(field, r, c,
                                      std::vector<Elem>(digits.begin() + pos, digits.begin() + pos + r * c));
                    pos += r * c;
                }
                Rep cand = Rep::unchecked(alg, field, dims, std::move(mats));
                if (cand.satisfies_relations()) {
                    const bool known = std::any_of(found.begin(), found.end(), [&](const Rep& x) {
                        return basis_contains_iso(hom_basis(x, cand));
                    });
                    if (!known && is_indecomposable(cand, budgets))
                        found.push_back(std::move(cand));
                }
                int i = entries - 1;
                while (i >= 0 && digits[i] == q - 1) {
                    digits[i] = 0;
                    --i;
                }
                if (i < 0)
                    break;
                ++digits[i];
            }
            for (auto& x : found)
                classes.push_back(std::move(x));
        }
    }

    // Labels: S/P/I names when they apply, otherwise the dimension vector,
    // with a letter suffix when several classes share it.
    std::vector<std::string> labels(classes.size());
    std::map<std::vector<int>, int> generic_count;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        labels[i] = label_for(alg, field, classes[i]);
        if (labels[i].empty())
            ++generic_count[classes[i].dims()];
    }
    std::map<std::vector<int>, int> generic_seen;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!labels[i].empty())
            continue;
        std::string name = "M";
        for (int d : classes[i].dims())
            name += std::to_string(d);
        if (generic_count[classes[i].dims()] > 1)
            name += static_cast<char>('a' + generic_seen[classes[i].dims()]++);
        labels[i] = std::move(name);
    }

    IndecCatalog catalog(alg, field, dim_bound);
    for (std::size_t i = 0; i < classes.size(); ++i)
        catalog.add_entry(labels[i], std::move(classes[i]));
    return catalog;
}

IndecCatalog base_change(const IndecCatalog& catalog, const gf::FieldPtr& extension)
{
    if (!catalog.field()->is_prime_field())
        throw Error(ErrorCode::NotPrimeBase, "catalog base change starts from the prime field");
    if (extension->p() != catalog.field()->p())
        throw Error(ErrorCode::CharacteristicMismatch, "extension has a different characteristic");
    const int n = extension->degree();
    for (const auto& e : catalog.entries())
        if (std::gcd(n, e.residue_degree) != 1)
            throw Error(ErrorCode::NotConservative,
                        "degree " + std::to_string(n) + " is not conservative: " + e.label + " has residue degree " +
                            std::to_string(e.residue_degree));
    IndecCatalog out(catalog.algebra(), extension, catalog.dim_bound());
    for (const auto& e : catalog.entries())
        out.add_entry(e.label, base_change(e.rep, extension));
    return out;
}

Multiset parse_labels(const IndecCatalog& catalog, std::string_view text)
{
    Multiset out;
    if (text == "0")
        return out;
    std::size_t start = 0;
    while (true) {
        const auto plus = text.find('+', start);
        const auto label = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        const int idx = catalog.index_of(label);
        if (idx < 0)
            throw Error(ErrorCode::ParseError, "unknown module label '" + std::string(label) + "'");
        out.push_back(idx);
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_labels(const IndecCatalog& catalog, const Multiset& labels)
{
    if (labels.empty())
        return "0";
    std::string s;
    for (int i : labels)
        s += (s.empty() ? "" : "+") + catalog.entry(i).label;
    return s;
}

Rep module_of(const IndecCatalog& catalog, const Multiset& labels)
{
    std::vector<Rep> parts;
    for (int i : labels)
        parts.push_back(catalog.entry(i).rep);
    return direct_sum(parts, catalog.algebra(), catalog.field());
}

std::vector<int> dims_of(const IndecCatalog& catalog, const Multiset& labels)
{
    std::vector<int> dims(catalog.algebra()->vertex_count(), 0);
    for (int i : labels)
        for (std::size_t v = 0; v < dims.size(); ++v)
            dims[v] += catalog.entry(i).rep.dim(static_cast<int>(v));
    return dims;
}

} // namespace hallforge
