#pragma once

// Submodule enumeration, Hall numbers F^M_{N,L} and Hall polynomial fitting.

#include "hallforge/budget.hpp"
#include "hallforge/repcat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hallforge {

using BigInt = boost::multiprecision::cpp_int;

/// Calls visit with the RREF bases (one per vertex) of every submodule of M,
/// each exactly once. With `only_dims` set, only submodules of that dimension
/// vector are produced. Vertices are filled sources-first where the quiver
/// allows it; a subspace at a target is only chosen among those containing the
/// images from the already chosen sources. Errors: BudgetExceeded.
void for_each_submodule(const Rep& m, const std::function<void(const std::vector<gf::Matrix>&)>& visit,
                        const Budgets& budgets = {}, const std::optional<std::vector<int>>& only_dims = {});
std::vector<std::vector<gf::Matrix>> submodules(const Rep& m, const Budgets& budgets = {});
std::uint64_t count_submodules(const Rep& m, const Budgets& budgets = {});

/// (quotient N, submodule L) -> number of U with U = L and M/U = N.
using HallTable = std::map<std::pair<Multiset, Multiset>, std::uint64_t>;

HallTable hall_table(const Rep& m, const IndecCatalog& catalog, const Budgets& budgets = {});
std::uint64_t hall_number(const Rep& m, Multiset n, Multiset l, const IndecCatalog& catalog,
                          const Budgets& budgets = {});

/// All n <= n_max coprime to every residue degree of the catalog.
std::vector<int> conservative_degrees(const IndecCatalog& catalog, int n_max);

class IntPolynomial {
public:
    IntPolynomial() = default;
    /// Low degree first; trailing zeros are dropped.
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const noexcept { return coeffs_.empty(); }
    BigInt operator()(const BigInt& x) const;
    /// "T^2+2T+1", "T-1", "0".
    std::string to_string() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

enum class FitStatus { Fitted, ValidationFailed, InsufficientPoints };
std::string_view to_string(FitStatus s);

struct FitPoint {
    BigInt x;
    BigInt y;
};

struct IntegerFit {
    IntPolynomial polynomial;
    FitStatus status = FitStatus::InsufficientPoints;
    int fit_points = 0; // points used for interpolation; the rest validated
};

/// Tries D = 0, 1, ..., degree_cap: interpolates the first D+1 points exactly
/// over the rationals and accepts the first integral polynomial matching all
/// remaining points, of which at least two are required.
IntegerFit fit_integer_polynomial(const std::vector<FitPoint>& points, int degree_cap);

struct HallFit {
    std::string algebra;
    std::string m_labels;
    std::string n_labels;
    std::string l_labels;
    int p = 0;
    std::vector<std::pair<std::uint64_t, BigInt>> fit_points;                 // (order, count)
    std::vector<std::tuple<std::uint64_t, BigInt, BigInt>> validation_points; // (order, count, predicted)
    IntPolynomial polynomial;
    std::vector<int> degrees_used;
    FitStatus status = FitStatus::InsufficientPoints;
};

/// Hall tables of modules over extension fields, reused across triples.
class HallCache {
public:
    explicit HallCache(const IndecCatalog& prime_catalog, Budgets budgets = {});

    const IndecCatalog& prime_catalog() const noexcept { return *prime_; }
    /// Catalog read over F_{p^n}. Errors: NotConservative.
    const IndecCatalog& catalog(int n);
    const HallTable& table(const Multiset& m, int n);
    std::uint64_t count(const Multiset& m, const Multiset& n_labels, const Multiset& l_labels, int degree);

private:
    const IndecCatalog* prime_;
    Budgets budgets_;
    std::map<int, IndecCatalog> catalogs_;
    std::map<std::pair<Multiset, int>, HallTable> tables_;
};

/// Fits phi^M_{N,L} from counts over F_{p^n}, n in `degrees` (each must be
/// conservative). Labels index the prime-field catalog. Errors:
/// NotConservative, plus whatever the counting raises.
HallFit fit_hall_polynomial(HallCache& cache, const Multiset& m, const Multiset& n, const Multiset& l,
                            const std::vector<int>& degrees);

struct VerifyOptions {
    int dim_bound = 3;
    std::vector<int> degrees{1, 2, 3, 4, 5};
    bool include_sums = false;
    /// Also evaluate each fitted polynomial at other primes and note agreement.
    bool cross_prime = false;
    Budgets budgets;
};

struct TripleResult {
    Multiset m;
    Multiset n;
    Multiset l;
    std::optional<HallFit> fit;
    std::string error;       // set when the triple raised instead of fitting
    std::string cross_prime; // observation only
};

struct VerifyReport {
    std::string algebra;
    int p = 0;
    int dim_bound = 0;
    std::vector<std::string> catalog_labels;
    std::vector<int> residue_degrees;
    std::vector<int> degrees_requested;
    std::vector<int> degrees_used;
    std::vector<TripleResult> triples;

    int count(FitStatus s) const;
    int errors() const;
    /// Human-readable table, one line per triple.
    std::string text() const;
    /// Line-oriented key=value dump in a fixed key order.
    std::string dump() const;
};

/// Builds the catalog and fits a polynomial for every dimension-compatible
/// triple. Per-triple errors are recorded and the run continues; catalog
/// construction errors propagate.
VerifyReport verify_theorem(const AlgebraPtr& alg, const VerifyOptions& options);

/// All multisets of catalog indices whose dimension vectors are <= bound
/// componentwise, ordered by (total dimension, dimension vector, indices).
std::vector<Multiset> multisets_within(const IndecCatalog& catalog, const std::vector<int>& bound);

} // namespace hallforge
