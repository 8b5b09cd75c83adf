#include "brion/face_complexes.hpp"

#include <algorithm>

namespace brion {

std::string_view to_string(SubsetKind kind) {
    switch (kind) {
    case SubsetKind::visible:
        return "visible";
    case SubsetKind::invisible:
        return "invisible";
    case SubsetKind::back:
        return "back";
    case SubsetKind::front:
        return "front";
    case SubsetKind::lower:
        return "lower";
    case SubsetKind::upper:
        return "upper";
    case SubsetKind::custom:
        return "custom";
    }
    return "custom";
}

bool FaceSubset::contains(std::size_t face) const {
    return std::binary_search(members.begin(), members.end(), face);
}

FaceSubset faces_below_facets(const Polytope& p, const std::vector<bool>& facet_selected,
                              SubsetKind kind) {
    FaceSubset out{&p, {}, kind};
    for (auto i : p.proper_faces()) {
        const auto& fs = p.face(i).facets;
        if (std::any_of(fs.begin(), fs.end(), [&](std::size_t g) { return facet_selected[g]; })) {
            out.members.push_back(i);
        }
    }
    return out;
}

FaceSubset complement(const FaceSubset& s, SubsetKind kind) {
    FaceSubset out{s.polytope, {}, kind};
    for (auto i : s.polytope->proper_faces()) {
        if (!s.contains(i)) {
            out.members.push_back(i);
        }
    }
    return out;
}

FacePartition classify_visible(const Polytope& p, std::span<const Rat> x) {
    if (p.contains(x)) {
        throw GeometryError("classification undefined: point inside polytope");
    }
    std::vector<bool> sel;
    for (const auto& f : p.facets()) {
        sel.push_back(facet_side(f, x) < 0);
    }
    auto vis = faces_below_facets(p, sel, SubsetKind::visible);
    auto inv = complement(vis, SubsetKind::invisible);
    return {std::move(vis), std::move(inv)};
}

FacePartition classify_back(const Polytope& p, std::span<const Rat> x) {
    if (p.interior_contains(x)) {
        throw GeometryError("classification undefined: point in the interior of the polytope");
    }
    std::vector<bool> sel;
    for (const auto& f : p.facets()) {
        sel.push_back(facet_side(f, x) > 0);
    }
    auto back = faces_below_facets(p, sel, SubsetKind::back);
    auto front = complement(back, SubsetKind::front);
    return {std::move(back), std::move(front)};
}

FacePartition classify_lower(const Polytope& p, std::span<const Rat> d) {
    if (is_zero(d)) {
        throw UsageError("direction must be non-zero");
    }
    std::vector<bool> sel;
    for (const auto& f : p.facets()) {
        sel.push_back(sgn(dot(f.normal, d)) > 0);
    }
    auto low = faces_below_facets(p, sel, SubsetKind::lower);
    auto up = complement(low, SubsetKind::upper);
    return {std::move(low), std::move(up)};
}

long euler_char(const Polytope& p, std::span<const std::size_t> faces) {
    long chi = 0;
    for (auto i : faces) {
        chi += (p.face(i).dim % 2 == 0) ? 1 : -1;
    }
    return chi;
}

long euler_char(const FaceSubset& s) {
    if (s.polytope == nullptr) {
        return 0;
    }
    return euler_char(*s.polytope, s.members);
}

FaceSubset boundary_complex(const Polytope& p) {
    return FaceSubset{&p, p.proper_faces(), SubsetKind::custom};
}

bool is_subcomplex(const FaceSubset& s) {
    const auto& p = *s.polytope;
    for (auto f : s.members) {
        for (auto g : p.proper_faces()) {
            if (p.is_subface(g, f) && !s.contains(g)) {
                return false;
            }
        }
    }
    return true;
}

bool is_order_filter(const FaceSubset& s) {
    const auto& p = *s.polytope;
    for (auto f : s.members) {
        for (auto g : p.proper_faces()) {
            if (p.is_subface(f, g) && !s.contains(g)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace brion
