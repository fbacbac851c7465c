// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "hallforge/cli.hpp"
#include "hallforge/hall.hpp"
#include "oracle/brute.hpp"
#include "oracle/hall_check.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace hallforge;

namespace {

gf::FieldPtr F(int p, int n = 1) { return gf::make_field(p, n); }

const std::vector<std::string> kFinite = {"hereditary-a2", "hereditary-a3", "ct-a3-cyclic", "ct-a4"};

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double seconds)
{
    if (!o.pass)
        ++failures;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << seconds;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " -- " << o.detail << " (" << t.str()
              << " s)" << std::endl;
}

template <class F>
void criterion(int id, const std::string& title, F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o = {false, std::string("threw ") + e.what()};
    }
    report(id, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

// Every Fitted triple must reproduce each of its counts exactly.
bool exact(const VerifyReport& r)
{
    for (const auto& t : r.triples) {
        if (!t.fit || t.fit->status != FitStatus::Fitted)
            continue;
        for (const auto& [q, c] : t.fit->fit_points)
            if (t.fit->polynomial(BigInt(q)) != c)
                return false;
        for (const auto& [q, c, pred] : t.fit->validation_points)
            if (t.fit->polynomial(BigInt(q)) != c || pred != c)
                return false;
    }
    return true;
}

std::string summary(const VerifyReport& r)
{
    std::ostringstream s;
    s << r.algebra << " p=" << r.p << " degrees {";
    for (std::size_t i = 0; i < r.degrees_used.size(); ++i)
        s << (i ? "," : "") << r.degrees_used[i];
    s << "}: " << r.triples.size() << " triples, " << r.count(FitStatus::Fitted) << " fitted, "
      << r.count(FitStatus::ValidationFailed) << " failed, " << r.count(FitStatus::InsufficientPoints)
      << " insufficient, " << r.errors() << " errors";
    return s.str();
}

Outcome polynomial_runs(const std::string& name, bool extra_p3_run)
{
    Outcome o;
    std::vector<std::pair<int, std::vector<int>>> runs = {{2, {1, 2, 3, 4, 5}}, {3, {1, 2, 3}}};
    if (extra_p3_run)
        runs.push_back({3, {1, 2, 3, 4}});
    for (const auto& [p, degrees] : runs) {
        VerifyOptions opt;
        opt.dim_bound = 3;
        opt.degrees = degrees;
        opt.include_sums = true;
        const auto r = verify_theorem(preset(name, F(p)), opt);
        const bool ok = r.count(FitStatus::ValidationFailed) == 0 && r.errors() == 0 && exact(r) &&
                        !r.triples.empty();
        o.pass = o.pass && ok;
        o.detail += (o.detail.empty() ? "" : "; ") + summary(r);
    }
    return o;
}

int bound_for(const std::string& name) { return name == "hereditary-a2" ? 2 : name == "ct-a3-cyclic" ? 4 : 3; }

Rep kronecker_d2(const AlgebraPtr& kr)
{
    auto f = kr->base();
    return Rep(kr, f, {2, 2},
               {gf::Matrix::from_ints(f, 2, 2, {1, 0, 0, 1}), gf::Matrix::from_ints(f, 2, 2, {0, 1, 1, 1})});
}

} // namespace

int main()
{
    criterion(1, "Hall polynomials on ct-a3-cyclic, bound 3, with direct sums", [] {
        return polynomial_runs("ct-a3-cyclic", true);
    });

    criterion(2, "Hall polynomials on hereditary-a2 and hereditary-a3", [] {
        Outcome a = polynomial_runs("hereditary-a2", false);
        Outcome b = polynomial_runs("hereditary-a3", false);
        return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
    });

    criterion(3, "ext1(M,N) = stable hom(N, tau M) on all catalog pairs", [] {
        int pairs = 0, bad = 0;
        for (const auto& name : kFinite)
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const auto cat = list_indecomposables(alg, alg->base(), bound_for(name));
                for (const auto& m : cat.entries()) {
                    const Rep t = tau(m.rep);
                    for (const auto& n : cat.entries()) {
                        ++pairs;
                        bad += ext1_dim(m.rep, n.rep) == stable_hom_dim(n.rep, t) ? 0 : 1;
                    }
                }
            }
        return Outcome{bad == 0 && pairs > 0,
                       std::to_string(pairs) + " ordered pairs over 4 presets at q=2,3, " + std::to_string(bad) +
                           " exceptions"};
    });

    criterion(4, "hall numbers match brute-force subspace enumeration, total dim M <= 3", [] {
        int modules = 0, triples = 0, bad = 0;
        std::string first;
        for (const auto& name : std::vector<std::string>{"hereditary-a2", "hereditary-a3", "ct-a3-cyclic", "ct-a4",
                                                         "kronecker"})
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const auto cat = list_indecomposables(alg, alg->base(), 3);
                const auto t = oracle::compare_hall_numbers(cat, 3);
                modules += t.modules;
                triples += t.triples;
                bad += t.mismatches;
                if (first.empty() && !t.first_problem.empty())
                    first = name + " p=" + std::to_string(p) + ": " + t.first_problem;
            }
        return Outcome{bad == 0 && triples > 0,
                       std::to_string(triples) + " triples over " + std::to_string(modules) +
                           " modules (5 presets, F_2 and F_3), " + std::to_string(bad) + " mismatches" +
                           (first.empty() ? "" : ", first: " + first)};
    });

    criterion(5, "Hall product associativity on ct-a3-cyclic at q = 2, total dim M <= 3", [] {
        auto alg = preset("ct-a3-cyclic", F(2));
        const auto cat = list_indecomposables(alg, alg->base(), 3);
        HallCache cache(cat);
        const auto all = oracle::multisets_up_to(cat, 3);
        auto hall = [&](const Multiset& m, const Multiset& n, const Multiset& l) -> std::uint64_t {
            return m.empty() ? (n.empty() && l.empty() ? 1 : 0) : cache.count(m, n, l, 1);
        };
        auto dims = [&](std::initializer_list<const Multiset*> parts) {
            Multiset u;
            for (const auto* p : parts)
                u.insert(u.end(), p->begin(), p->end());
            return dims_of(cat, u);
        };
        int identities = 0, bad = 0;
        for (const auto& m : all)
            for (const auto& n : all)
                for (const auto& l : all)
                    for (const auto& k : all) {
                        if (dims({&n, &l, &k}) != dims_of(cat, m))
                            continue;
                        std::uint64_t lhs = 0, rhs = 0;
                        for (const auto& x : all) {
                            const auto dx = dims_of(cat, x);
                            if (dx == dims({&l, &k}))
                                lhs += hall(m, n, x) * hall(x, l, k);
                            if (dx == dims({&n, &l}))
                                rhs += hall(m, x, k) * hall(x, n, l);
                        }
                        ++identities;
                        bad += lhs == rhs ? 0 : 1;
                    }
        return Outcome{bad == 0 && identities > 0,
                       std::to_string(identities) + " identities (M,N,L,K), " + std::to_string(bad) + " failures"};
    });

    criterion(6, "catalog sizes 3 / 6 / 6 agree with brute-force enumeration", [] {
        Outcome o;
        for (const auto& [name, bound, expected] :
             std::vector<std::tuple<std::string, int, int>>{{"hereditary-a2", 2, 3}, {"hereditary-a3", 3, 6},
                                                             {"ct-a3-cyclic", 4, 6}})
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const int lib = list_indecomposables(alg, alg->base(), bound).size();
                const int brute = oracle::count_indecomposables(oracle::from_rep(simple(alg, 0)), bound);
                o.pass = o.pass && lib == expected && brute == expected;
                o.detail += (o.detail.empty() ? "" : ", ") + name + " q=" + std::to_string(p) + ": " +
                            std::to_string(lib) + "/" + std::to_string(brute);
            }
        o.detail += " (library/brute force)";
        return o;
    });

    criterion(7, "Kronecker residue degree 2: odd conservative degrees, splits over F_4, not over F_8", [] {
        auto kr = preset("kronecker", F(2));
        IndecCatalog cat = list_indecomposables(kr, kr->base(), 2);
        const int k = cat.add_entry("K", kronecker_d2(kr));
        const auto degrees = conservative_degrees(cat, 6);
        const Rep k4 = base_change(cat.entry(k).rep, F(2, 2));
        const Rep k8 = base_change(cat.entry(k).rep, F(2, 3));
        const auto parts = decompose(k4, list_indecomposables(kr, F(2, 2), 2));
        const bool split4 = !is_indecomposable(k4) && parts.size() == 2 && parts[0] != parts[1];
        const bool whole8 = is_indecomposable(k8);
        const bool ok = cat.entry(k).residue_degree == 2 && degrees == std::vector<int>{1, 3, 5} && split4 && whole8;
        std::string d = "conservative degrees <= 6: {";
        for (std::size_t i = 0; i < degrees.size(); ++i)
            d += (i ? "," : "") + std::to_string(degrees[i]);
        d += "}, F_4: " + std::string(split4 ? "two non-isomorphic summands" : "no split") +
             ", F_8: " + (whole8 ? "indecomposable" : "decomposable");
        return Outcome{ok, d};
    });

    criterion(8, "byte-identical reruns, exact integer arithmetic", [] {
        const std::vector<std::vector<std::string>> commands = {
            {"indec", "--preset", "ct-a4", "-p", "3", "--dim-bound", "3"},
            {"hall", "--preset", "hereditary-a2", "-p", "3", "-n", "2", "-M", "S2+S2", "-N", "S2", "-L", "S2"},
            {"fit", "--preset", "ct-a3-cyclic", "-p", "2", "-M", "P1", "-N", "S1", "-L", "S2"},
            {"verify", "--preset", "ct-a3-cyclic", "-p", "2", "--dim-bound", "3", "--include-sums"},
            {"verify", "--preset", "hereditary-a3", "-p", "2", "--dim-bound", "3", "--include-sums",
             "--cross-prime"},
            {"archeck", "--preset", "ct-a4", "-p", "3", "--dim-bound", "3"},
        };
        bool same = true;
        for (const auto& c : commands) {
            std::ostringstream o1, e1, o2, e2;
            const int r1 = cli::run(c, o1, e1);
            const int r2 = cli::run(c, o2, e2);
            same = same && r1 == r2 && o1.str() == o2.str() && e1.str() == e2.str() && !o1.str().empty();
        }
        VerifyOptions opt;
        opt.include_sums = true;
        const auto r1 = verify_theorem(preset("ct-a4", F(2)), opt).dump();
        const auto r2 = verify_theorem(preset("ct-a4", F(2)), opt).dump();
        same = same && r1 == r2;

        // arbitrary precision: a fit whose coefficients overflow 64 bits
        const BigInt big("340282366920938463463374607431768211457");
        std::vector<FitPoint> pts;
        for (int x : {2, 4, 8, 16, 32})
            pts.push_back({x, big * x * x + 1});
        const auto fit = fit_integer_polynomial(pts, 3);
        const bool wide = fit.status == FitStatus::Fitted && fit.polynomial.coeffs().size() == 3 &&
                          fit.polynomial.coeffs()[2] == big;

        // no floating-point types in the library sources
        int float_uses = 0;
        const std::regex fp("\\b(float|double|long double)\\b");
        for (const char* sub : {"src", "include"})
            for (const auto& e : std::filesystem::recursive_directory_iterator(
                     std::filesystem::path(HALLFORGE_SOURCE_DIR) / sub)) {
                if (!e.is_regular_file())
                    continue;
                std::ifstream in(e.path());
                for (std::string line; std::getline(in, line);)
                    float_uses += std::regex_search(line, fp) ? 1 : 0;
            }
        return Outcome{same && wide && float_uses == 0,
                       std::to_string(commands.size()) + " commands rerun " + (same ? "identically" : "with diffs") +
                           ", 2^128+1 coefficient " + (wide ? "recovered exactly" : "lost") + ", " +
                           std::to_string(float_uses) + " floating-point declarations in src/ and include/"};
    });

    std::cout << (failures == 0 ? "all 8 criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
