#include "brion/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brion {

namespace {

bool lex_less(const RatVector& a, const RatVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int affine_dim(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx) {
    if (idx.empty()) {
        return -1;
    }
    RatMatrix diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    }
    return static_cast<int>(rank(diffs));
}

} // namespace

int facet_side(const Facet& facet, std::span<const Rat> x) {
    return sgn(dot(facet.normal, x) - facet.offset);
}

int facet_side(const Facet& facet, std::span<const Int> x) {
    return sgn(dot(facet.normal, x) - facet.offset);
}

Polytope Polytope::hull(const std::vector<RatVector>& input) {
    if (input.empty()) {
        throw UsageError("hull: empty point set");
    }
    const std::size_t n = input.front().size();
    if (n == 0) {
        throw UsageError("hull: zero-dimensional ambient space");
    }
    for (const auto& p : input) {
        if (p.size() != n) {
            throw UsageError("hull: points have inconsistent dimensions");
        }
    }

    std::vector<RatVector> pts = input;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    if (affine_dim(pts, all) != static_cast<int>(n)) {
        throw GeometryError("degenerate: polytope not full-dimensional");
    }

    // Every facet hyperplane passes through n affinely independent input
    // points; keep the candidates with all points weakly on one side.
    std::map<std::pair<IntVector, Rat>, bool> seen;
    std::vector<std::pair<IntVector, Rat>> planes;
    for_each_combination(pts.size(), n, [&](std::span<const std::size_t> sub_idx) {
        RatMatrix diffs;
        for (std::size_t i = 1; i < sub_idx.size(); ++i) {
            diffs.push_back(sub(pts[sub_idx[i]], pts[sub_idx[0]]));
        }
        const auto ker = kernel_basis(diffs, n);
        if (ker.size() != 1) {
            return;
        }
        IntVector normal = primitive_direction(ker.front());
        Rat offset = dot(normal, pts[sub_idx[0]]);
        bool has_pos = false;
        bool has_neg = false;
        for (const auto& p : pts) {
            const int s = sgn(dot(normal, p) - offset);
            has_pos = has_pos || s > 0;
            has_neg = has_neg || s < 0;
            if (has_pos && has_neg) {
                return;
            }
        }
        if (has_neg) {
            normal = negate(normal);
            offset = -offset;
        }
        auto key = std::make_pair(normal, offset);
        if (seen.emplace(key, true).second) {
            planes.push_back(std::move(key));
        }
    });
    std::sort(planes.begin(), planes.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) {
            return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(),
                                                b.first.end());
        }
        return a.second < b.second;
    });

    // A point is a vertex iff the normals of its tight facets have full rank.
    Polytope poly;
    poly.dim_ = n;
    for (const auto& p : pts) {
        RatMatrix tight;
        for (const auto& [normal, offset] : planes) {
            if (dot(normal, p) == offset) {
                tight.push_back(to_rat(normal));
            }
        }
        if (rank(tight) == n) {
            poly.vertices_.push_back(p);
        }
    }

    for (const auto& [normal, offset] : planes) {
        Facet f{normal, offset, {}};
        for (std::size_t v = 0; v < poly.vertices_.size(); ++v) {
            if (dot(normal, poly.vertices_[v]) == offset) {
                f.vertices.push_back(v);
            }
        }
        poly.facets_.push_back(std::move(f));
    }

    // Close the facet vertex sets under intersection.
    std::set<std::vector<std::size_t>> found;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> whole(poly.vertices_.size());
    for (std::size_t i = 0; i < whole.size(); ++i) {
        whole[i] = i;
    }
    found.insert(whole);
    for (const auto& f : poly.facets_) {
        if (found.insert(f.vertices).second) {
            queue.push_back(f.vertices);
        }
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& f : poly.facets_) {
            auto meet = intersect(queue[q], f.vertices);
            if (!meet.empty() && found.insert(meet).second) {
                queue.push_back(std::move(meet));
            }
        }
    }

    for (const auto& vs : found) {
        Face face;
        face.vertices = vs;
        face.dim = affine_dim(poly.vertices_, vs);
        for (std::size_t g = 0; g < poly.facets_.size(); ++g) {
            if (std::includes(poly.facets_[g].vertices.begin(), poly.facets_[g].vertices.end(),
                              vs.begin(), vs.end())) {
                face.facets.push_back(g);
            }
        }
        if (vs == whole) {
            face.facets.clear();
        }
        poly.faces_.push_back(std::move(face));
    }
    std::sort(poly.faces_.begin(), poly.faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) {
            return a.dim < b.dim;
        }
        return a.vertices < b.vertices;
    });

    poly.vertex_faces_.assign(poly.vertices_.size(), 0);
    for (std::size_t i = 0; i < poly.faces_.size(); ++i) {
        const auto& face = poly.faces_[i];
        if (face.vertices == whole) {
            poly.whole_face_ = i;
        }
        if (face.dim == 0) {
            poly.vertex_faces_[face.vertices.front()] = i;
        }
    }
    return poly;
}

std::vector<std::size_t> Polytope::proper_faces() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (i != whole_face_) {
            out.push_back(i);
        }
    }
    return out;
}

bool Polytope::is_subface(std::size_t sub, std::size_t super) const {
    const auto& a = faces_.at(sub).vertices;
    const auto& b = faces_.at(super).vertices;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool Polytope::contains(std::span<const Rat> x) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return facet_side(f, x) >= 0; });
}

bool Polytope::contains(std::span<const Int> x) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return facet_side(f, x) >= 0; });
}

bool Polytope::interior_contains(std::span<const Rat> x) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return facet_side(f, x) > 0; });
}

bool Polytope::interior_contains(std::span<const Int> x) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return facet_side(f, x) > 0; });
}

RatVector Polytope::representative_point(std::size_t face) const {
    const auto& vs = faces_.at(face).vertices;
    RatVector sum(dim_, Rat(0));
    for (auto v : vs) {
        sum = add(sum, vertices_[v]);
    }
    return scale(sum, Rat(1, static_cast<unsigned long>(vs.size())));
}

RatVector Polytope::lower_corner() const {
    RatVector lo = vertices_.front();
    for (const auto& v : vertices_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            lo[i] = std::min(lo[i], v[i]);
        }
    }
    return lo;
}

RatVector Polytope::upper_corner() const {
    RatVector hi = vertices_.front();
    for (const auto& v : vertices_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    return hi;
}

std::vector<IntVector> Polytope::lattice_points() const {
    std::vector<IntVector> out;
    if (auto box = integer_hull_box(lower_corner(), upper_corner())) {
        box->for_each([&](const IntVector& a) {
            if (contains(std::span<const Int>(a))) {
                out.push_back(a);
            }
        });
    }
    return out;
}

std::vector<IntVector> Polytope::interior_lattice_points() const {
    std::vector<IntVector> out;
    if (auto box = integer_hull_box(lower_corner(), upper_corner())) {
        box->for_each([&](const IntVector& a) {
            if (interior_contains(std::span<const Int>(a))) {
                out.push_back(a);
            }
        });
    }
    return out;
}

Polytope Polytope::negated() const {
    std::vector<RatVector> pts;
    pts.reserve(vertices_.size());
    for (const auto& v : vertices_) {
        pts.push_back(negate(v));
    }
    return hull(pts);
}

} // namespace brion
