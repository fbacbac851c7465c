#pragma once

// Homomorphisms, decompositions, indecomposable catalogs and the
// Auslander-Reiten translate for modules over a bound quiver algebra.

#include "hallforge/budget.hpp"
#include "hallforge/rep.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hallforge {

struct HomBasis {
    std::vector<Morphism> basis;
    int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// Basis of Hom(M, N), found as the solution space of the intertwining
/// equations N_a f_s = f_t M_a. Errors: MixedContext.
HomBasis hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

/// True when some element of the basis is an isomorphism. Sound in general,
/// and complete when the source or target is indecomposable (the
/// non-isomorphisms then form a proper subspace).
bool basis_contains_iso(const HomBasis& h);

class IndecCatalog;

/// Exact isomorphism test. With a catalog over the same context the answer
/// compares decompositions; otherwise an invertible homomorphism is searched
/// for. Errors: MixedContext, Undecidable.
bool is_isomorphic(const Rep& m, const Rep& n, const IndecCatalog* catalog = nullptr,
                   const Budgets& budgets = {});

/// Errors: ZeroModule, Undecidable (End(M) too large to rule out idempotents).
bool is_indecomposable(const Rep& m, const Budgets& budgets = {});

/// Sorted multiset of catalog indices.
using Multiset = std::vector<int>;

/// Krull-Schmidt decomposition expressed in catalog entries.
/// Errors: MixedContext, NotInCatalog, Undecidable.
Multiset decompose(const Rep& m, const IndecCatalog& catalog, const Budgets& budgets = {});

/// Splits M as ker f^N (+) im f^N for an endomorphism f that is neither
/// nilpotent nor invertible; empty when f does not split M.
std::vector<Rep> fitting_split(const Rep& m, const Morphism& f);

/// Residue degree of an indecomposable: End(M)/rad End(M) = F_{q^d}.
/// Errors: ZeroModule, NotIndecomposable.
int residue_degree(const Rep& m);

struct CatalogEntry {
    std::string label;
    Rep rep;
    int residue_degree = 1;
};

class IndecCatalog {
public:
    IndecCatalog(AlgebraPtr algebra, gf::FieldPtr field, int dim_bound);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const gf::FieldPtr& field() const noexcept { return field_; }
    int dim_bound() const noexcept { return dim_bound_; }
    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    const CatalogEntry& entry(int i) const { return entries_.at(i); }
    /// -1 when absent.
    int index_of(std::string_view label) const;

    /// Appends an indecomposable; the residue degree is computed here.
    /// Errors: MixedContext, InvalidArgument (duplicate label), NotIndecomposable.
    int add_entry(std::string label, Rep rep);

private:
    AlgebraPtr algebra_;
    gf::FieldPtr field_;
    int dim_bound_ = 0;
    std::vector<CatalogEntry> entries_;
};

/// Iso-classes of indecomposables with total dimension <= dim_bound, ordered
/// by (total dimension, dimension vector), one canonical representative each.
/// Errors: BudgetExceeded, Undecidable.
IndecCatalog list_indecomposables(const AlgebraPtr& alg, const gf::FieldPtr& field, int dim_bound,
                                  const Budgets& budgets = {});

/// Same catalog read over an extension E of the prime field. The entries stay
/// indecomposable only for conservative degrees. Errors: NotConservative,
/// NotPrimeBase, CharacteristicMismatch.
IndecCatalog base_change(const IndecCatalog& catalog, const gf::FieldPtr& extension);

/// "P1+S2" style; "0" is the empty multiset. Errors: ParseError.
Multiset parse_labels(const IndecCatalog& catalog, std::string_view text);
std::string format_labels(const IndecCatalog& catalog, const Multiset& labels);
Rep module_of(const IndecCatalog& catalog, const Multiset& labels);
std::vector<int> dims_of(const IndecCatalog& catalog, const Multiset& labels);

struct ProjectivePresentation {
    /// Vertices of the indecomposable summands of P0 and P1.
    std::vector<int> p0_vertices;
    std::vector<int> p1_vertices;
    Rep p0;
    Rep p1;
    /// Kernel of the cover, as a submodule of P0.
    Rep kernel;
    Morphism cover;     // P0 -> M
    Morphism relations; // P1 -> P0
    /// lambda[j][c]: coordinates over path_basis(p0_vertices[c], p1_vertices[j])
    /// of the element of e_c Lambda e_j sending the j-th generator of P1 into
    /// the c-th summand of P0.
    std::vector<std::vector<std::vector<gf::Elem>>> lambda;
};

/// Minimal presentation P1 -> P0 -> M -> 0. Errors: ZeroModule.
ProjectivePresentation min_projective_presentation(const Rep& m);

/// dim Ext^1(M, N). Errors: MixedContext.
int ext1_dim(const Rep& m, const Rep& n);

/// Auslander-Reiten translate, D Tr M = ker(nu P1 -> nu P0).
/// Errors: ZeroModule.
Rep tau(const Rep& m);

struct InjectiveEnvelope {
    std::vector<int> vertices; // one injective summand per entry
    Rep injective;
    Morphism embedding; // N -> injective
};

InjectiveEnvelope injective_envelope(const Rep& n);

/// dim of Hom(N, X) modulo the maps factoring through an injective.
/// Errors: MixedContext.
int stable_hom_dim(const Rep& n, const Rep& x);

/// Line-oriented text format for modules ("dims", then one "arrow" block per
/// arrow with the matrix rows).
std::string print_module(const Rep& m);
/// Errors: ParseError, plus the Rep validation errors.
Rep parse_module(std::string_view text, const AlgebraPtr& alg, const gf::FieldPtr& field);

} // namespace hallforge
