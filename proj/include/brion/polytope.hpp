#pragma once

#include "brion/box.hpp"
#include "brion/geom_core.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace brion {

/// Supporting inequality <normal, x> >= offset, tight on the facet.
struct Facet {
    IntVector normal; // primitive, inward-pointing
    Rat offset;
    std::vector<std::size_t> vertices; // sorted vertex indices
};

/// Non-empty face. The polytope itself is a face with no facets.
struct Face {
    std::vector<std::size_t> vertices; // sorted
    std::vector<std::size_t> facets;   // sorted indices of facets containing the face
    int dim = 0;
};

/// Full-dimensional rational polytope with its H-representation and the
/// complete lattice of non-empty faces.
///
/// Vertices are stored in lexicographic order, facets are ordered by
/// (normal, offset) and faces by (dim, vertex set), so every index is
/// reproducible from the input point set alone.
class Polytope {
  public:
    /// Convex hull of `points`. Throws GeometryError when the points do not
    /// span the ambient space, UsageError on ragged or empty input.
    static Polytope hull(const std::vector<RatVector>& points);

    std::size_t dim() const { return dim_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    /// F(P)_0: every non-empty face including P itself.
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(std::size_t i) const { return faces_.at(i); }

    /// Index of P in faces().
    std::size_t whole_face() const { return whole_face_; }
    /// Index in faces() of the 0-dimensional face at vertex `v`.
    std::size_t vertex_face(std::size_t v) const { return vertex_faces_.at(v); }
    /// Indices of the non-empty proper faces, F(P)_0^1.
    std::vector<std::size_t> proper_faces() const;

    /// True iff face `sub` is a face of face `super` (reflexive).
    bool is_subface(std::size_t sub, std::size_t super) const;

    bool contains(std::span<const Rat> x) const;
    bool contains(std::span<const Int> x) const;
    bool interior_contains(std::span<const Rat> x) const;
    bool interior_contains(std::span<const Int> x) const;

    /// Vertex barycenter of a face; lies in its relative interior.
    RatVector representative_point(std::size_t face) const;

    /// Coordinatewise bounds of the vertex set.
    RatVector lower_corner() const;
    RatVector upper_corner() const;

    /// Lattice points of P (or of its interior), lexicographic order.
    std::vector<IntVector> lattice_points() const;
    std::vector<IntVector> interior_lattice_points() const;

    /// -P = {-x : x in P}.
    Polytope negated() const;

  private:
    Polytope() = default;

    std::size_t dim_ = 0;
    std::vector<RatVector> vertices_;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
    std::size_t whole_face_ = 0;
    std::vector<std::size_t> vertex_faces_;
};

inline Polytope hull(const std::vector<RatVector>& points) { return Polytope::hull(points); }
inline const std::vector<Face>& face_lattice(const Polytope& p) { return p.faces(); }
inline bool contains(const Polytope& p, std::span<const Rat> x) { return p.contains(x); }
inline bool interior_contains(const Polytope& p, std::span<const Rat> x) {
    return p.interior_contains(x);
}

/// Sign of <normal, x> - offset.
int facet_side(const Facet& facet, std::span<const Rat> x);
int facet_side(const Facet& facet, std::span<const Int> x);

} // namespace brion
