#pragma once

// Bound quiver algebras kQ/I over a prime field.
//
// Conventions (fixed for the whole library):
//  * Vertices are 0-based in the C++ API; text formats and labels are 1-based.
//  * A path is written left to right in traversal order: "a.b" is a then b,
//    so it is only defined when target(a) == source(b).
//  * Modules are right modules. For such a module M the space M e_v sits at
//    vertex v and an arrow a: s -> t acts as a linear map M_s -> M_t, stored as
//    a (dim_t x dim_s) matrix. The path a.b then acts by M_b * M_a.
//  * The projective e_i Lambda has at vertex j the paths from i to j.

#include "hallforge/gf.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hallforge {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;

    bool operator==(const Arrow&) const = default;
};

class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int vertex_count);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }

    /// Returns the arrow index. Throws InvalidArgument on bad vertices or a
    /// duplicate name.
    int add_arrow(std::string name, int source, int target);
    /// -1 when absent.
    int find_arrow(std::string_view name) const;

    bool is_acyclic() const;
    Quiver opposite() const;

    bool operator==(const Quiver&) const = default;

private:
    int vertex_count_ = 0;
    std::vector<Arrow> arrows_;
};

struct RelationTerm {
    int coeff = 1;
    std::vector<std::string> path; // arrow names, traversal order

    bool operator==(const RelationTerm&) const = default;
};

struct Relation {
    std::vector<RelationTerm> terms;

    bool operator==(const Relation&) const = default;
};

/// A path as arrow indices; a trivial path is identified by its vertex.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    auto operator<=>(const Path&) const = default;
};

/// Relation with arrow names resolved, coefficients reduced into [0,p).
struct ResolvedRelation {
    int source = 0;
    int target = 0;
    std::vector<std::pair<gf::Elem, std::vector<int>>> terms;
};

struct BuildOptions {
    /// Overrides the InfiniteDimensional length cutoff when positive.
    int length_cutoff = 0;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    const std::string& name() const noexcept { return name_; }
    const Quiver& quiver() const noexcept { return quiver_; }
    const gf::FieldPtr& base() const noexcept { return base_; }
    const std::vector<Relation>& relations() const noexcept { return relations_; }
    const std::vector<ResolvedRelation>& resolved_relations() const noexcept { return resolved_; }
    int vertex_count() const noexcept { return quiver_.vertex_count(); }
    int total_dim() const noexcept { return static_cast<int>(basis_.size()); }
    int nil_bound() const noexcept { return nil_bound_; }

    /// Every basis element is the residue class of a path.
    const std::vector<Path>& basis() const noexcept { return basis_; }
    /// Indices into basis() of the paths from i to j, i.e. a basis of e_i Lambda e_j.
    std::span<const int> path_basis(int i, int j) const;
    /// Position of basis element b inside path_basis(source(b), target(b)).
    int local_index(int b) const { return local_index_.at(b); }

    /// Coordinates (over path_basis(source(b), target(a))) of b.a; empty when
    /// target(b) != source(a).
    const std::vector<gf::Elem>& right_arrow(int b, int a) const;
    /// Coordinates (over path_basis(source(a), target(b))) of a.b; empty when
    /// target(a) != source(b).
    const std::vector<gf::Elem>& left_arrow(int a, int b) const;

    /// Normal form of an arbitrary path over path_basis(source, target).
    std::vector<gf::Elem> normal_form(const Path& path) const;

    /// Matrix of x -> x.b on e_u Lambda, as a map
    /// path_basis(u, source(b)) -> path_basis(u, target(b)).
    gf::Matrix right_mult_matrix(int u, int b) const;

private:
    friend AlgebraPtr build_algebra(Quiver, gf::FieldPtr, std::vector<Relation>, std::string,
                                    const BuildOptions&);
    Algebra() = default;

    std::string name_;
    Quiver quiver_;
    gf::FieldPtr base_;
    std::vector<Relation> relations_;
    std::vector<ResolvedRelation> resolved_;
    int nil_bound_ = 0;
    std::vector<Path> basis_;
    std::vector<std::vector<int>> pair_basis_; // [i * n + j]
    std::vector<int> local_index_;
    std::vector<std::vector<std::vector<gf::Elem>>> right_; // [b][a]
    std::vector<std::vector<std::vector<gf::Elem>>> left_;  // [a][b]
    // RREF data used for normal forms of arbitrary paths.
    std::vector<Path> columns_;
    gf::Matrix reduced_;
    std::vector<int> pivot_row_of_column_;
};

/// Computes the path basis of kQ/I. Errors: NotAdmissible (path of length < 2
/// or non-parallel terms), InfiniteDimensional, InvalidArgument (unknown arrow),
/// NotPrimeBase.
AlgebraPtr build_algebra(Quiver quiver, gf::FieldPtr base, std::vector<Relation> relations,
                         std::string name = "custom", const BuildOptions& options = {});

/// Opposite quiver with every relation path reversed.
AlgebraPtr opposite(const Algebra& alg);

std::vector<std::string> preset_names();
/// Errors: UnknownPreset.
AlgebraPtr preset(std::string_view name, gf::FieldPtr base);

/// Line-oriented text format ("quiver", "field", "arrow", "rel" lines).
std::string print_algebra(const Algebra& alg);
AlgebraPtr parse_algebra(std::string_view text, std::string name = "custom",
                         const BuildOptions& options = {});

} // namespace hallforge
