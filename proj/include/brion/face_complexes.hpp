#pragma once

#include "brion/polytope.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace brion {

enum class SubsetKind { visible, invisible, back, front, lower, upper, custom };

std::string_view to_string(SubsetKind kind);

/// A set of proper faces of a polytope, identified by index into faces().
struct FaceSubset {
    const Polytope* polytope = nullptr;
    std::vector<std::size_t> members; // sorted
    SubsetKind kind = SubsetKind::custom;

    bool contains(std::size_t face) const;
    std::size_t size() const { return members.size(); }
};

using FacePartition = std::pair<FaceSubset, FaceSubset>;

/// (Vis(x), Inv(x)). Throws GeometryError when x lies in P.
FacePartition classify_visible(const Polytope& p, std::span<const Rat> x);

/// (Back(x), Front(x)). Throws GeometryError when x lies in int(P). A facet
/// whose hyperplane contains x is a front facet.
FacePartition classify_back(const Polytope& p, std::span<const Rat> x);

/// (Low(d), Up(d)). Throws UsageError for d = 0. Facets with <d, u> = 0 are
/// upper.
FacePartition classify_lower(const Polytope& p, std::span<const Rat> d);

/// Sum of (-1)^dim over the members; 0 for the empty subset.
long euler_char(const FaceSubset& s);

/// Euler characteristic of an arbitrary list of face indices of p.
long euler_char(const Polytope& p, std::span<const std::size_t> faces);

/// F(P)_0^1 as a FaceSubset of kind custom.
FaceSubset boundary_complex(const Polytope& p);

/// Faces of p contained in at least one facet selected by `facet_selected`.
/// This is how every classification extends from facets to lower faces.
FaceSubset faces_below_facets(const Polytope& p, const std::vector<bool>& facet_selected,
                              SubsetKind kind);

/// The complement of `s` inside F(P)_0^1.
FaceSubset complement(const FaceSubset& s, SubsetKind kind);

/// Closed under taking non-empty subfaces (within F(P)_0^1).
bool is_subcomplex(const FaceSubset& s);
/// Closed under taking proper superfaces.
bool is_order_filter(const FaceSubset& s);

} // namespace brion
