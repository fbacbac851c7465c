#include "hallforge/cli.hpp"

#include "hallforge/error.hpp"
#include "hallforge/hall.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hallforge::cli {

namespace {

struct Config {
    std::string preset;
    std::string algebra_file;
    int p = 2;
    int n = 1;
    int dim_bound = 3;
    int length_cutoff = 0;
    std::vector<int> degrees{1, 2, 3, 4, 5};
    std::uint64_t budget = 0;
    std::string m_labels;
    std::string n_labels;
    std::string l_labels;
    std::string out_path;
    std::string dump_path;
    bool include_sums = false;
    bool cross_prime = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

Budgets budgets_for(const Config& c)
{
    Budgets b = Budgets::from_env();
    if (c.budget > 0)
        b.candidates = c.budget;
    return b;
}

AlgebraPtr load_algebra(const Config& c)
{
    if (c.preset.empty() == c.algebra_file.empty())
        throw UsageError("give exactly one of --preset or --algebra");
    if (!gf::is_prime(c.p))
        throw UsageError("-p must be a prime");
    if (!c.preset.empty())
        return preset(c.preset, gf::make_field(c.p, 1));
    BuildOptions opts;
    opts.length_cutoff = c.length_cutoff;
    auto alg = parse_algebra(read_file(c.algebra_file), std::filesystem::path(c.algebra_file).stem().string(), opts);
    return alg;
}

std::string dims_text(const std::vector<int>& dims)
{
    std::string s;
    for (int d : dims)
        s += (s.empty() ? "" : ",") + std::to_string(d);
    return s;
}

int cmd_indec(const Config& c, std::ostream& out)
{
    const auto alg = load_algebra(c);
    const auto catalog = list_indecomposables(alg, alg->base(), c.dim_bound, budgets_for(c));
    std::vector<int> order(catalog.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return catalog.entry(a).label < catalog.entry(b).label; });
    out << "# " << alg->name() << " over F_" << alg->base()->p() << ", total dimension <= " << c.dim_bound << ", "
        << catalog.size() << " indecomposables\n";
    out << std::left << std::setw(8) << "label" << std::setw(12) << "dims"
        << "residue_degree\n";
    for (int i : order) {
        const auto& e = catalog.entry(i);
        out << std::left << std::setw(8) << e.label << std::setw(12) << dims_text(e.rep.dims()) << e.residue_degree
            << '\n';
    }
    return kOk;
}

IndecCatalog catalog_for(const AlgebraPtr& alg, int bound, const Budgets& budgets)
{
    return list_indecomposables(alg, alg->base(), bound, budgets);
}

int cmd_hall(const Config& c, std::ostream& out)
{
    if (c.m_labels.empty())
        throw UsageError("hall needs -M");
    const auto alg = load_algebra(c);
    const Budgets budgets = budgets_for(c);
    const auto field = gf::make_field(alg->base()->p(), c.n);

    std::optional<Rep> from_file;
    int needed = c.dim_bound;
    if (c.m_labels.front() == '@') {
        from_file = parse_module(read_file(c.m_labels.substr(1)), alg, field);
        needed = std::max(needed, from_file->total_dim());
    }
    auto prime = catalog_for(alg, needed, budgets);
    if (!from_file) {
        const auto d = dims_of(prime, parse_labels(prime, c.m_labels));
        const int dim = std::accumulate(d.begin(), d.end(), 0);
        if (dim > needed)
            prime = catalog_for(alg, dim, budgets);
    }
    const IndecCatalog catalog = c.n == 1 ? prime : base_change(prime, field);
    const Rep m = from_file ? *from_file : module_of(catalog, parse_labels(catalog, c.m_labels));
    const Multiset n = parse_labels(catalog, c.n_labels.empty() ? "0" : c.n_labels);
    const Multiset l = parse_labels(catalog, c.l_labels.empty() ? "0" : c.l_labels);
    out << hall_number(m, n, l, catalog, budgets) << '\n';
    return kOk;
}

std::string fit_line(const HallFit& fit)
{
    std::string points;
    for (const auto& [q, count] : fit.fit_points)
        points += "(" + std::to_string(q) + ":" + count.str() + ")";
    for (const auto& [q, count, pred] : fit.validation_points)
        points += "(" + std::to_string(q) + ":" + count.str() + ")";
    const bool fitted = fit.status == FitStatus::Fitted;
    return fit.m_labels + " | " + fit.n_labels + " | " + fit.l_labels + " | φ = " +
           (fitted ? fit.polynomial.to_string() : std::string("?")) + " | points = " + points + " | " +
           std::string(to_string(fit.status));
}

int cmd_fit(const Config& c, std::ostream& out)
{
    if (c.m_labels.empty())
        throw UsageError("fit needs -M");
    const auto alg = load_algebra(c);
    const Budgets budgets = budgets_for(c);
    auto catalog = catalog_for(alg, c.dim_bound, budgets);
    const int dim = [&] {
        const auto d = dims_of(catalog, parse_labels(catalog, c.m_labels));
        return std::accumulate(d.begin(), d.end(), 0);
    }();
    if (dim > c.dim_bound)
        catalog = catalog_for(alg, dim, budgets);
    HallCache cache(catalog, budgets);
    const auto fit = fit_hall_polynomial(cache, parse_labels(catalog, c.m_labels),
                                         parse_labels(catalog, c.n_labels.empty() ? "0" : c.n_labels),
                                         parse_labels(catalog, c.l_labels.empty() ? "0" : c.l_labels), c.degrees);
    out << fit_line(fit) << '\n';
    return fit.status == FitStatus::ValidationFailed ? kFalsified : kOk;
}

int cmd_verify(const Config& c, std::ostream& out)
{
    const auto alg = load_algebra(c);
    VerifyOptions opts;
    opts.dim_bound = c.dim_bound;
    opts.degrees = c.degrees;
    opts.include_sums = c.include_sums;
    opts.cross_prime = c.cross_prime;
    opts.budgets = budgets_for(c);
    const auto report = verify_theorem(alg, opts);
    const std::string text = report.text();
    out << text;
    if (!c.out_path.empty())
        write_file(c.out_path, text);
    if (!c.dump_path.empty())
        write_file(c.dump_path, report.dump());
    return report.count(FitStatus::ValidationFailed) > 0 ? kFalsified : kOk;
}

int cmd_archeck(const Config& c, std::ostream& out)
{
    const auto alg = load_algebra(c);
    const auto catalog = catalog_for(alg, c.dim_bound, budgets_for(c));
    std::ostringstream text;
    text << "# " << alg->name() << " over F_" << alg->base()->p() << ", total dimension <= " << c.dim_bound
         << ": dim Ext1(M,N) vs dim stable Hom(N, tau M)\n";
    int mismatches = 0;
    int pairs = 0;
    for (const auto& m : catalog.entries()) {
        const Rep tm = tau(m.rep);
        for (const auto& n : catalog.entries()) {
            const int ext = ext1_dim(m.rep, n.rep);
            const int st = stable_hom_dim(n.rep, tm);
            ++pairs;
            if (ext != st)
                ++mismatches;
            text << m.label << ' ' << n.label << " ext1=" << ext << " stable=" << st
                 << (ext == st ? "" : " MISMATCH") << '\n';
        }
    }
    text << "# pairs " << pairs << ", mismatches " << mismatches << '\n';
    out << text.str();
    if (!c.out_path.empty())
        write_file(c.out_path, text.str());
    return mismatches == 0 ? kOk : kFailure;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::BudgetExceeded:
        return kBudget;
    case ErrorCode::Undecidable:
    case ErrorCode::NotInCatalog:
        return kUndecidable;
    case ErrorCode::DivideByZero:
    case ErrorCode::DimensionError:
    case ErrorCode::ZeroModule:
    case ErrorCode::NotIndecomposable:
        return kFailure;
    default:
        return kUsage;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Hall numbers and Hall polynomials of bound quiver algebras over finite fields", "hallforge"};
    app.require_subcommand(1);

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--preset", c.preset, "Built-in algebra: " + [] {
            std::string s;
            for (const auto& name : preset_names())
                s += (s.empty() ? "" : ", ") + name;
            return s;
        }());
        sub->add_option("--algebra", c.algebra_file, "Algebra description file");
        sub->add_option("-p", c.p, "Characteristic of the base field")->check(CLI::PositiveNumber);
        sub->add_option("--length-cutoff", c.length_cutoff, "Longest path length tried when building the algebra");
        sub->add_option("--dim-bound", c.dim_bound, "Total dimension bound of the indecomposable catalog")
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget", c.budget, "Cap on candidate tuples (overrides HALLFORGE_BUDGET)")
            ->check(CLI::PositiveNumber);
    };
    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("-M", c.m_labels, "Module M as labels joined by '+' (hall also takes @FILE)")->required();
        sub->add_option("-N", c.n_labels, "Quotient N as labels joined by '+' (0 for zero)");
        sub->add_option("-L", c.l_labels, "Submodule L as labels joined by '+' (0 for zero)");
    };

    auto* indec = app.add_subcommand("indec", "List the indecomposables up to the dimension bound");
    add_algebra(indec);
    auto* hall = app.add_subcommand("hall", "Count submodules U of M with U = L and M/U = N");
    add_algebra(hall);
    add_triple(hall);
    hall->add_option("-n", c.n, "Extension degree of the counting field F_{p^n}")->check(CLI::PositiveNumber);
    auto* fit = app.add_subcommand("fit", "Fit the Hall polynomial of one triple");
    add_algebra(fit);
    add_triple(fit);
    fit->add_option("--degrees", c.degrees, "Extension degrees used for fitting")->delimiter(',');
    auto* verify = app.add_subcommand("verify", "Fit Hall polynomials for every triple of the catalog");
    add_algebra(verify);
    verify->add_option("--degrees", c.degrees, "Extension degrees used for fitting")->delimiter(',');
    verify->add_flag("--include-sums", c.include_sums, "Also use pairwise direct sums as M");
    verify->add_flag("--cross-prime", c.cross_prime, "Compare fitted polynomials with counts at other primes");
    verify->add_option("--out", c.out_path, "Write the report to this file");
    verify->add_option("--dump", c.dump_path, "Write the key=value dump to this file");
    auto* archeck = app.add_subcommand("archeck", "Check Ext1(M,N) = stable Hom(N, tau M) on the catalog");
    add_algebra(archeck);
    archeck->add_option("--out", c.out_path, "Write the table to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (indec->parsed())
            return cmd_indec(c, out);
        if (hall->parsed())
            return cmd_hall(c, out);
        if (fit->parsed())
            return cmd_fit(c, out);
        if (verify->parsed())
            return cmd_verify(c, out);
        return cmd_archeck(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

} // namespace hallforge::cli
