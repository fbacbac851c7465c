#include "hallforge/error.hpp"
#include "hallforge/hall.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hallforge {

HallCache::HallCache(const IndecCatalog& prime_catalog, Budgets budgets)
    : prime_(&prime_catalog), budgets_(budgets)
{
    if (!prime_catalog.field()->is_prime_field())
        throw Error(ErrorCode::NotPrimeBase, "Hall caches start from a prime-field catalog");
}

const IndecCatalog& HallCache::catalog(int n)
{
    if (n == 1)
        return *prime_;
    auto it = catalogs_.find(n);
    if (it == catalogs_.end())
        it = catalogs_.emplace(n, base_change(*prime_, gf::make_field(prime_->field()->p(), n))).first;
    return it->second;
}

const HallTable& HallCache::table(const Multiset& m, int n)
{
    const auto key = std::make_pair(m, n);
    auto it = tables_.find(key);
    if (it == tables_.end()) {
        const IndecCatalog& cat = catalog(n);
        it = tables_.emplace(key, hall_table(module_of(cat, m), cat, budgets_)).first;
    }
    return it->second;
}

std::uint64_t HallCache::count(const Multiset& m, const Multiset& n_labels, const Multiset& l_labels, int degree)
{
    const HallTable& t = table(m, degree);
    const auto it = t.find({n_labels, l_labels});
    return it == t.end() ? 0 : it->second;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

} // namespace

HallFit fit_hall_polynomial(HallCache& cache, const Multiset& m, const Multiset& n, const Multiset& l,
                            const std::vector<int>& degrees)
{
    const IndecCatalog& prime = cache.prime_catalog();
    HallFit fit;
    fit.algebra = prime.algebra()->name();
    fit.m_labels = format_labels(prime, m);
    fit.n_labels = format_labels(prime, n);
    fit.l_labels = format_labels(prime, l);
    fit.p = prime.field()->p();

    std::vector<int> degs = degrees;
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    if (degs.empty() || degs.front() < 1)
        throw Error(ErrorCode::InvalidArgument, "extension degrees must be positive");
    for (int d : degs)
        for (const auto& e : prime.entries())
            if (std::gcd(d, e.residue_degree) != 1)
                throw Error(ErrorCode::NotConservative, "degree " + std::to_string(d) +
                                                            " is not conservative (" + e.label +
                                                            " has residue degree " +
                                                            std::to_string(e.residue_degree) + ")");
    fit.degrees_used = degs;

    const auto dm = dims_of(prime, m);
    const auto dn = dims_of(prime, n);
    const auto dl = dims_of(prime, l);
    for (std::size_t v = 0; v < dm.size(); ++v)
        if (dm[v] != dn[v] + dl[v]) {
            fit.status = FitStatus::Fitted; // zero polynomial, nothing to count
            return fit;
        }

    Multiset ns = n, ls = l, ms = m;
    std::sort(ns.begin(), ns.end());
    std::sort(ls.begin(), ls.end());
    std::sort(ms.begin(), ms.end());
    std::vector<FitPoint> points;
    std::vector<std::uint64_t> orders;
    for (int d : degs) {
        const std::uint64_t q = ipow(fit.p, d);
        orders.push_back(q);
        points.push_back({BigInt(q), BigInt(cache.count(ms, ns, ls, d))});
    }
    const int total = std::accumulate(dm.begin(), dm.end(), 0);
    const IntegerFit r = fit_integer_polynomial(points, total * total / 4);
    fit.status = r.status;
    if (r.status == FitStatus::Fitted) {
        fit.polynomial = r.polynomial;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (static_cast<int>(i) < r.fit_points)
                fit.fit_points.emplace_back(orders[i], points[i].y);
            else
                fit.validation_points.emplace_back(orders[i], points[i].y, r.polynomial(points[i].x));
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i)
            fit.fit_points.emplace_back(orders[i], points[i].y);
    }
    return fit;
}

std::vector<Multiset> multisets_within(const IndecCatalog& catalog, const std::vector<int>& bound)
{
    std::vector<Multiset> out;
    Multiset cur;
    std::vector<int> used(bound.size(), 0);
    std::function<void(int)> rec = [&](int start) {
        out.push_back(cur);
        for (int i = start; i < catalog.size(); ++i) {
            const auto& d = catalog.entry(i).rep.dims();
            bool fits = true;
            for (std::size_t v = 0; v < bound.size(); ++v)
                fits = fits && used[v] + d[v] <= bound[v];
            if (!fits)
                continue;
            for (std::size_t v = 0; v < bound.size(); ++v)
                used[v] += d[v];
            cur.push_back(i);
            rec(i);
            cur.pop_back();
            for (std::size_t v = 0; v < bound.size(); ++v)
                used[v] -= d[v];
        }
    };
    rec(0);
    auto key = [&](const Multiset& s) {
        const auto d = dims_of(catalog, s);
        return std::make_tuple(std::accumulate(d.begin(), d.end(), 0), d, s);
    };
    std::sort(out.begin(), out.end(), [&](const Multiset& a, const Multiset& b) { return key(a) < key(b); });
    return out;
}

namespace {

std::string cross_prime_note(const VerifyReport& report, const TripleResult& t, const IndecCatalog& prime,
                             const AlgebraPtr& alg, int dim_bound, const Budgets& budgets,
                             std::map<int, std::optional<IndecCatalog>>& other_catalogs)
{
    if (!t.fit || t.fit->status != FitStatus::Fitted)
        return {};
    std::vector<int> agree;
    std::string differs;
    for (int p : {2, 3, 5, 7}) {
        if (p == report.p)
            continue;
        auto it = other_catalogs.find(p);
        if (it == other_catalogs.end()) {
            std::optional<IndecCatalog> cat;
            try {
                auto other = build_algebra(alg->quiver(), gf::make_field(p, 1), alg->relations(), alg->name());
                cat.emplace(list_indecomposables(other, gf::make_field(p, 1), dim_bound, budgets));
            } catch (const Error&) {
            }
            it = other_catalogs.emplace(p, std::move(cat)).first;
        }
        if (!it->second)
            continue;
        const IndecCatalog& cat = *it->second;
        auto translate = [&](const Multiset& s, Multiset& out) {
            for (int i : s) {
                const int j = cat.index_of(prime.entry(i).label);
                if (j < 0)
                    return false;
                out.push_back(j);
            }
            std::sort(out.begin(), out.end());
            return true;
        };
        Multiset m, n, l;
        if (!translate(t.m, m) || !translate(t.n, n) || !translate(t.l, l))
            continue;
        try {
            const BigInt count = hall_number(module_of(cat, m), n, l, cat, budgets);
            const BigInt predicted = t.fit->polynomial(BigInt(p));
            if (count == predicted)
                agree.push_back(p);
            else
                differs += (differs.empty() ? "" : ", ") + std::to_string(p) + " (count " + count.str() +
                           ", phi " + predicted.str() + ")";
        } catch (const Error&) {
        }
    }
    std::string note;
    if (!agree.empty())
        note = "agrees at p=" + join_ints(agree);
    if (!differs.empty())
        note += (note.empty() ? "" : "; ") + std::string("differs at p=") + differs;
    return note.empty() ? "not comparable" : note;
}

} // namespace

VerifyReport verify_theorem(const AlgebraPtr& alg, const VerifyOptions& options)
{
    const gf::FieldPtr base = alg->base();
    VerifyReport report;
    report.algebra = alg->name();
    report.p = base->p();
    report.dim_bound = options.dim_bound;
    report.degrees_requested = options.degrees;

    const IndecCatalog catalog = list_indecomposables(alg, base, options.dim_bound, options.budgets);
    for (const auto& e : catalog.entries()) {
        report.catalog_labels.push_back(e.label);
        report.residue_degrees.push_back(e.residue_degree);
    }
    int n_max = 0;
    for (int d : options.degrees)
        n_max = std::max(n_max, d);
    const auto conservative = conservative_degrees(catalog, n_max);
    for (int d : options.degrees)
        if (std::find(conservative.begin(), conservative.end(), d) != conservative.end() &&
            std::find(report.degrees_used.begin(), report.degrees_used.end(), d) == report.degrees_used.end())
            report.degrees_used.push_back(d);
    std::sort(report.degrees_used.begin(), report.degrees_used.end());

    std::vector<Multiset> modules;
    for (int i = 0; i < catalog.size(); ++i)
        modules.push_back({i});
    if (options.include_sums)
        for (int i = 0; i < catalog.size(); ++i)
            for (int j = i; j < catalog.size(); ++j)
                if (catalog.entry(i).rep.total_dim() + catalog.entry(j).rep.total_dim() <= options.dim_bound)
                    modules.push_back({i, j});

    HallCache cache(catalog, options.budgets);
    std::map<int, std::optional<IndecCatalog>> other_catalogs;
    for (const auto& m : modules) {
        const auto dm = dims_of(catalog, m);
        const auto parts = multisets_within(catalog, dm);
        for (const auto& n : parts) {
            const auto dn = dims_of(catalog, n);
            for (const auto& l : parts) {
                const auto dl = dims_of(catalog, l);
                bool compatible = true;
                for (std::size_t v = 0; v < dm.size(); ++v)
                    compatible = compatible && dn[v] + dl[v] == dm[v];
                if (!compatible)
                    continue;
                TripleResult t{m, n, l, std::nullopt, {}, {}};
                try {
                    if (report.degrees_used.empty())
                        throw Error(ErrorCode::NotConservative, "no conservative degree among those requested");
                    t.fit = fit_hall_polynomial(cache, m, n, l, report.degrees_used);
                } catch (const Error& e) {
                    t.error = e.what();
                }
                if (options.cross_prime)
                    t.cross_prime = cross_prime_note(report, t, catalog, alg, options.dim_bound, options.budgets,
                                                     other_catalogs);
                report.triples.push_back(std::move(t));
            }
        }
    }
    return report;
}

int VerifyReport::count(FitStatus s) const
{
    return static_cast<int>(std::count_if(triples.begin(), triples.end(),
                                          [&](const TripleResult& t) { return t.fit && t.fit->status == s; }));
}

int VerifyReport::errors() const
{
    return static_cast<int>(
        std::count_if(triples.begin(), triples.end(), [](const TripleResult& t) { return !t.error.empty(); }));
}

namespace {

std::string label_text(const std::vector<std::string>& labels, const Multiset& s)
{
    if (s.empty())
        return "0";
    std::string out;
    for (int i : s)
        out += (out.empty() ? "" : "+") + labels[i];
    return out;
}

std::string points_text(const HallFit& fit)
{
    std::string s;
    for (const auto& [q, c] : fit.fit_points)
        s += "(" + std::to_string(q) + ":" + c.str() + ")";
    for (const auto& [q, c, pred] : fit.validation_points)
        s += "(" + std::to_string(q) + ":" + c.str() + ")";
    return s;
}

std::string points_kv(const HallFit& fit, bool validation)
{
    std::string s;
    if (!validation)
        for (const auto& [q, c] : fit.fit_points)
            s += (s.empty() ? "" : ",") + std::to_string(q) + ":" + c.str();
    else
        for (const auto& [q, c, pred] : fit.validation_points)
            s += (s.empty() ? "" : ",") + std::to_string(q) + ":" + c.str() + ":" + pred.str();
    return s;
}

} // namespace

std::string VerifyReport::text() const
{
    std::ostringstream out;
    out << "# algebra " << algebra << ", p = " << p << ", catalog bound " << dim_bound
        << " (indecomposables of larger dimension are assumed absent)\n";
    out << "# catalog:";
    for (std::size_t i = 0; i < catalog_labels.size(); ++i)
        out << ' ' << catalog_labels[i] << "[d=" << residue_degrees[i] << ']';
    out << '\n';
    out << "# degrees requested " << join_ints(degrees_requested) << ", conservative used "
        << join_ints(degrees_used) << '\n';
    for (const auto& t : triples) {
        out << label_text(catalog_labels, t.m) << " | " << label_text(catalog_labels, t.n) << " | "
            << label_text(catalog_labels, t.l) << " | ";
        if (t.fit) {
            const bool fitted = t.fit->status == FitStatus::Fitted;
            out << "φ = " << (fitted ? t.fit->polynomial.to_string() : "?") << " | points = " << points_text(*t.fit)
                << " | " << to_string(t.fit->status);
        } else {
            out << "φ = ? | points = | error: " << t.error;
        }
        if (!t.cross_prime.empty())
            out << " | cross-prime: " << t.cross_prime;
        out << '\n';
    }
    out << "# triples " << triples.size() << ", fitted " << count(FitStatus::Fitted) << ", validation failed "
        << count(FitStatus::ValidationFailed) << ", insufficient points " << count(FitStatus::InsufficientPoints)
        << ", errors " << errors() << '\n';
    return out.str();
}

std::string VerifyReport::dump() const
{
    std::ostringstream out;
    out << "algebra=" << algebra << '\n';
    out << "p=" << p << '\n';
    out << "catalog_bound=" << dim_bound << '\n';
    out << "catalog_size=" << catalog_labels.size() << '\n';
    for (std::size_t i = 0; i < catalog_labels.size(); ++i)
        out << "catalog." << i << "=" << catalog_labels[i] << ":" << residue_degrees[i] << '\n';
    out << "degrees_requested=" << join_ints(degrees_requested) << '\n';
    out << "degrees_used=" << join_ints(degrees_used) << '\n';
    out << "triples=" << triples.size() << '\n';
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        const std::string k = "triple." + std::to_string(i) + ".";
        out << k << "M=" << label_text(catalog_labels, t.m) << '\n';
        out << k << "N=" << label_text(catalog_labels, t.n) << '\n';
        out << k << "L=" << label_text(catalog_labels, t.l) << '\n';
        if (t.fit) {
            out << k << "status=" << to_string(t.fit->status) << '\n';
            out << k << "polynomial="
                << (t.fit->status == FitStatus::Fitted ? t.fit->polynomial.to_string() : std::string("?")) << '\n';
            out << k << "fit_points=" << points_kv(*t.fit, false) << '\n';
            out << k << "validation_points=" << points_kv(*t.fit, true) << '\n';
        } else {
            out << k << "status=Error" << '\n';
            out << k << "error=" << t.error << '\n';
        }
        if (!t.cross_prime.empty())
            out << k << "cross_prime=" << t.cross_prime << '\n';
    }
    out << "summary.fitted=" << count(FitStatus::Fitted) << '\n';
    out << "summary.validation_failed=" << count(FitStatus::ValidationFailed) << '\n';
    out << "summary.insufficient_points=" << count(FitStatus::InsufficientPoints) << '\n';
    out << "summary.errors=" << errors() << '\n';
    return out.str();
}

} // namespace hallforge
