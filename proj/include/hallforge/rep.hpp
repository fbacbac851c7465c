#pragma once

// Finite-dimensional right modules, stored as quiver representations.
// See presentation.hpp for the orientation conventions.

#include "hallforge/gf.hpp"
#include "hallforge/presentation.hpp"

#include <span>
#include <vector>

namespace hallforge {

/// A module homomorphism: one (dim_target(v) x dim_source(v)) matrix per vertex.
using Morphism = std::vector<gf::Matrix>;

class Rep {
public:
    Rep() = default;
    /// Validates shapes, field characteristic and every relation.
    Rep(AlgebraPtr algebra, gf::FieldPtr field, std::vector<int> dims, std::vector<gf::Matrix> mats);

    /// Skips relation checking; for data already known to be a module
    /// (restrictions, quotients, kernels).
    static Rep unchecked(AlgebraPtr algebra, gf::FieldPtr field, std::vector<int> dims,
                         std::vector<gf::Matrix> mats);
    static Rep zero(AlgebraPtr algebra, gf::FieldPtr field);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const gf::FieldPtr& field() const noexcept { return field_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    int dim(int v) const { return dims_.at(v); }
    int total_dim() const noexcept;
    bool is_zero() const noexcept { return total_dim() == 0; }

    const gf::Matrix& mat(int arrow) const { return mats_.at(arrow); }
    const std::vector<gf::Matrix>& mats() const noexcept { return mats_; }

    /// Action of a path (traversal order), a dim(target) x dim(source) matrix.
    gf::Matrix path_action(const Path& path) const;
    bool satisfies_relations() const;

    /// Entries of all arrow matrices, concatenated in arrow order.
    std::vector<gf::Elem> encoding() const;

    bool operator==(const Rep& rhs) const;

private:
    AlgebraPtr algebra_;
    gf::FieldPtr field_;
    std::vector<int> dims_;
    std::vector<gf::Matrix> mats_;
};

/// Throws MixedContext unless both modules share algebra and field.
void require_same_context(const Rep& a, const Rep& b);

/// Field defaults to the algebra's base field.
Rep simple(const AlgebraPtr& alg, int vertex, gf::FieldPtr field = nullptr);
/// e_i Lambda; at vertex j it has the paths from i to j.
Rep projective(const AlgebraPtr& alg, int vertex, gf::FieldPtr field = nullptr);
/// D(Lambda e_i): the dual of the projective of the opposite algebra, i.e. at
/// vertex j the dual of the paths from j to i.
Rep injective(const AlgebraPtr& alg, int vertex, gf::FieldPtr field = nullptr);

Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_sum(std::span<const Rep> parts, const AlgebraPtr& alg, const gf::FieldPtr& field);

/// Reads the prime-field matrices over the extension E.
/// Errors: NotPrimeBase, CharacteristicMismatch.
Rep base_change(const Rep& m, const gf::FieldPtr& extension);

/// Submodule spanned at each vertex by the rows of bases[v], which must be in
/// reduced row-echelon form and arrow-stable.
Rep sub_rep(const Rep& m, const std::vector<gf::Matrix>& bases);
/// Quotient by the submodule with RREF bases; the quotient basis at v is the
/// set of standard vectors at the non-pivot coordinates.
Rep quotient_rep(const Rep& m, const std::vector<gf::Matrix>& bases);

Morphism compose(const Morphism& g, const Morphism& f); // g after f
bool is_isomorphism(const Morphism& f);
bool is_nilpotent(const Morphism& f);
Morphism identity_morphism(const Rep& m);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, gf::Elem s);
/// Concatenated row-major entries of every component.
std::vector<gf::Elem> flatten(const Morphism& f);

} // namespace hallforge
