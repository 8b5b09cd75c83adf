#pragma once

#include "brion/polytope.hpp"

#include <cstdint>
#include <vector>

namespace brion {

/// Polyhedral cone at the origin. `halfspaces` holds normals u of the
/// inequalities <u, x> >= 0; with `has_hrep` and no halfspaces the cone is
/// all of R^n. `generators`, when present, span the same set.
struct Cone {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> generators;
    std::vector<IntVector> halfspaces;
    bool has_hrep = false;
    bool pointed = false;

    /// Membership through the halfspace representation.
    bool contains(std::span<const Rat> x) const;
};

/// Simplicial cone w + {sum l_i g_i} with per-generator half-openness:
/// open_mask[i] excludes the facet l_i = 0.
struct ShiftedSimplicialCone {
    RatVector shift;
    std::vector<IntVector> generators;
    std::vector<bool> open_mask;

    bool contains(std::span<const Rat> x) const;
    bool contains(std::span<const Int> x) const;
};

/// Lattice points w + sum l_i g_i with l_i in [0,1) (closed) or (0,1] (open).
struct ParallelepipedPoints {
    std::vector<IntVector> points; // lexicographic
    const ShiftedSimplicialCone* cone = nullptr;
};

/// Index subsets of a ray list, one per simplicial cell.
using Triangulation = std::vector<std::vector<std::size_t>>;

/// C_F: generated by P - F, cut out by the facets containing F.
Cone barrier_cone(const Polytope& p, std::size_t face);

/// a in T_F = F + C_F.
bool tangent_membership(const Polytope& p, std::size_t face, std::span<const Rat> a);
bool tangent_membership(const Polytope& p, std::size_t face, std::span<const Int> a);
/// a in C_F.
bool barrier_membership(const Polytope& p, std::size_t face, std::span<const Rat> a);
bool barrier_membership(const Polytope& p, std::size_t face, std::span<const Int> a);
/// a in -F + C_F, tested as a + f0 in C_F for the representative point f0.
bool neg_shift_membership(const Polytope& p, std::size_t face, std::span<const Rat> a);
bool neg_shift_membership(const Polytope& p, std::size_t face, std::span<const Int> a);

/// Primitive edge directions leaving a vertex face; they generate C_v.
/// Throws UsageError when `vertex_face` is not 0-dimensional.
std::vector<IntVector> extreme_rays(const Polytope& p, std::size_t vertex_face);

/// Pulling triangulation anchored at the lowest-index ray. Throws
/// GeometryError when the rays contain a line.
Triangulation triangulate(const std::vector<IntVector>& rays);

/// Facets of cone(rays[subset]) within its linear span, as index subsets.
std::vector<std::vector<std::size_t>> cone_facets(const std::vector<IntVector>& rays,
                                                  const std::vector<std::size_t>& subset);

/// Marks every facet of every full-dimensional simplicial cell open iff xi
/// lies strictly beyond it; shifts are zero. Throws GeometryError when xi
/// sits on some cell's facet hyperplane.
std::vector<ShiftedSimplicialCone>
half_open_decompose(const std::vector<std::vector<IntVector>>& cells, std::span<const Rat> xi);

/// Seeded generic point: a small rational perturbation of the first cell's
/// generator sum, redrawn until it avoids every facet hyperplane.
RatVector generic_point(const std::vector<std::vector<IntVector>>& cells, std::uint64_t seed);

ParallelepipedPoints parallelepiped_points(const ShiftedSimplicialCone& c);

/// True iff the cone has a non-trivial lineality space.
bool contains_line(const Cone& c);

/// Same question answered from generators alone: some circuit of the
/// generators has a strictly positive dependency.
bool generators_contain_line(const std::vector<IntVector>& generators);

} // namespace brion
