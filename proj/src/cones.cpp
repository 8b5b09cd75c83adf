#include "brion/cones.hpp"

#include "brion/random.hpp"

#include <algorithm>
#include <set>

namespace brion {

namespace {

bool in_halfspaces(const Polytope& p, std::size_t face, std::span<const Rat> x, bool shifted) {
    const auto& f = p.face(face);
    for (auto g : f.facets) {
        const auto& facet = p.facets()[g];
        const Rat lhs = dot(facet.normal, x);
        if (shifted ? lhs < facet.offset : sgn(lhs) < 0) {
            return false;
        }
    }
    return true;
}

RatMatrix columns_of(const std::vector<IntVector>& gens) { return transpose(rows_of(gens)); }

// Coefficients of x in the basis `gens` (gens spanning the ambient space).
std::optional<RatVector> coefficients(const std::vector<IntVector>& gens, std::span<const Rat> x) {
    if (gens.empty()) {
        return is_zero(x) ? std::optional<RatVector>(RatVector{}) : std::nullopt;
    }
    return solve_linear(columns_of(gens), x);
}

bool in_half_open_box(const RatVector& lambda, const std::vector<bool>& open_mask) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (open_mask[i] ? (sgn(lambda[i]) <= 0 || lambda[i] > 1)
                         : (sgn(lambda[i]) < 0 || lambda[i] >= 1)) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> triangulate_subset(const std::vector<IntVector>& rays,
                                            const std::vector<std::size_t>& subset,
                                            Triangulation& out_cells) {
    std::vector<IntVector> sub;
    for (auto i : subset) {
        sub.push_back(rays[i]);
    }
    const std::size_t d = rank(rows_of(sub));
    if (subset.size() == d) {
        out_cells.push_back(subset);
        return subset;
    }
    const std::size_t apex = subset.front();
    for (const auto& facet : cone_facets(rays, subset)) {
        if (std::binary_search(facet.begin(), facet.end(), apex)) {
            continue;
        }
        Triangulation facet_cells;
        triangulate_subset(rays, facet, facet_cells);
        for (auto& cell : facet_cells) {
            cell.push_back(apex);
            std::sort(cell.begin(), cell.end());
            out_cells.push_back(std::move(cell));
        }
    }
    return subset;
}

} // namespace

bool Cone::contains(std::span<const Rat> x) const {
    return std::all_of(halfspaces.begin(), halfspaces.end(),
                       [&](const IntVector& u) { return sgn(dot(u, x)) >= 0; });
}

bool ShiftedSimplicialCone::contains(std::span<const Rat> x) const {
    const auto lambda = coefficients(generators, sub(x, shift));
    if (!lambda) {
        return false;
    }
    for (std::size_t i = 0; i < lambda->size(); ++i) {
        const int s = sgn((*lambda)[i]);
        if (s < 0 || (s == 0 && open_mask[i])) {
            return false;
        }
    }
    return true;
}

bool ShiftedSimplicialCone::contains(std::span<const Int> x) const {
    return contains(std::span<const Rat>(to_rat(x)));
}

Cone barrier_cone(const Polytope& p, std::size_t face) {
    if (face >= p.faces().size()) {
        throw UsageError("barrier_cone: face index out of range");
    }
    Cone c;
    c.ambient_dim = p.dim();
    c.has_hrep = true;
    for (auto g : p.face(face).facets) {
        c.halfspaces.push_back(p.facets()[g].normal);
    }
    if (p.face(face).dim == 0) {
        c.generators = extreme_rays(p, face);
    }
    c.pointed = !contains_line(c);
    return c;
}

bool tangent_membership(const Polytope& p, std::size_t face, std::span<const Rat> a) {
    return in_halfspaces(p, face, a, true);
}

bool tangent_membership(const Polytope& p, std::size_t face, std::span<const Int> a) {
    return tangent_membership(p, face, std::span<const Rat>(to_rat(a)));
}

bool barrier_membership(const Polytope& p, std::size_t face, std::span<const Rat> a) {
    return in_halfspaces(p, face, a, false);
}

bool barrier_membership(const Polytope& p, std::size_t face, std::span<const Int> a) {
    return barrier_membership(p, face, std::span<const Rat>(to_rat(a)));
}

bool neg_shift_membership(const Polytope& p, std::size_t face, std::span<const Rat> a) {
    return barrier_membership(p, face, std::span<const Rat>(add(a, p.representative_point(face))));
}

bool neg_shift_membership(const Polytope& p, std::size_t face, std::span<const Int> a) {
    return neg_shift_membership(p, face, std::span<const Rat>(to_rat(a)));
}

std::vector<IntVector> extreme_rays(const Polytope& p, std::size_t vertex_face) {
    const auto& vf = p.face(vertex_face);
    if (vf.dim != 0) {
        throw UsageError("extreme_rays: face " + std::to_string(vertex_face) + " is not a vertex");
    }
    const std::size_t v = vf.vertices.front();
    std::vector<IntVector> rays;
    for (const auto& f : p.faces()) {
        if (f.dim != 1 || !std::binary_search(f.vertices.begin(), f.vertices.end(), v)) {
            continue;
        }
        const std::size_t w = f.vertices[0] == v ? f.vertices[1] : f.vertices[0];
        rays.push_back(primitive_direction(sub(p.vertices()[w], p.vertices()[v])));
    }
    return rays;
}

std::vector<std::vector<std::size_t>> cone_facets(const std::vector<IntVector>& rays,
                                                  const std::vector<std::size_t>& subset) {
    std::vector<IntVector> gens;
    for (auto i : subset) {
        gens.push_back(rays[i]);
    }
    const std::size_t d = rank(rows_of(gens));
    const std::size_t n = rays.front().size();
    std::set<std::vector<std::size_t>> found;
    if (d == 0) {
        return {};
    }
    for_each_combination(subset.size(), d - 1, [&](std::span<const std::size_t> pick) {
        RatMatrix rows;
        for (auto k : pick) {
            rows.push_back(to_rat(gens[k]));
        }
        if (rank(rows) != d - 1) {
            return;
        }
        // Any annihilator of the picked rays restricts to the same functional
        // (up to scale) on span(gens); take one that does not vanish there.
        for (const auto& k : kernel_basis(rows, n)) {
            bool pos = false;
            bool neg = false;
            for (const auto& g : gens) {
                const int s = sgn(dot(g, std::span<const Rat>(k)));
                pos = pos || s > 0;
                neg = neg || s < 0;
            }
            if (!pos && !neg) {
                continue;
            }
            if (pos && neg) {
                return;
            }
            std::vector<std::size_t> facet;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (sgn(dot(gens[j], std::span<const Rat>(k))) == 0) {
                    facet.push_back(subset[j]);
                }
            }
            found.insert(std::move(facet));
            return;
        }
    });
    return {found.begin(), found.end()};
}

Triangulation triangulate(const std::vector<IntVector>& rays) {
    if (rays.empty()) {
        return {};
    }
    if (generators_contain_line(rays)) {
        throw GeometryError("cannot triangulate cone containing a line");
    }
    std::vector<std::size_t> all(rays.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    Triangulation cells;
    triangulate_subset(rays, all, cells);
    return cells;
}

std::vector<ShiftedSimplicialCone>
half_open_decompose(const std::vector<std::vector<IntVector>>& cells, std::span<const Rat> xi) {
    std::vector<ShiftedSimplicialCone> out;
    for (const auto& gens : cells) {
        if (gens.size() != xi.size()) {
            throw UsageError("half_open_decompose: cells must be full-dimensional simplicial cones");
        }
        const auto lambda = coefficients(gens, xi);
        if (!lambda) {
            throw UsageError("half_open_decompose: cell generators are dependent");
        }
        ShiftedSimplicialCone c{RatVector(xi.size(), Rat(0)), gens, {}};
        for (const auto& l : *lambda) {
            if (sgn(l) == 0) {
                throw GeometryError("shift vector not generic; reseed");
            }
            c.open_mask.push_back(sgn(l) < 0);
        }
        out.push_back(std::move(c));
    }
    return out;
}

RatVector generic_point(const std::vector<std::vector<IntVector>>& cells, std::uint64_t seed) {
    if (cells.empty()) {
        throw UsageError("generic_point: no cells");
    }
    const auto& first = cells.front();
    const std::size_t n = first.front().size();
    RatVector base(n, Rat(0));
    for (const auto& g : first) {
        base = add(base, to_rat(g));
    }
    Rng rng(seed);
    constexpr int max_attempts = 64;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        RatVector xi = base;
        for (auto& x : xi) {
            x += make_rat(Int(static_cast<long>(rng.uniform(-997, 997))), Int(4096));
        }
        bool generic = true;
        for (std::size_t c = 0; c < cells.size() && generic; ++c) {
            const auto lambda = coefficients(cells[c], xi);
            for (const auto& l : *lambda) {
                if (sgn(l) == 0 || (c == 0 && sgn(l) < 0)) {
                    generic = false;
                    break;
                }
            }
        }
        if (generic) {
            return xi;
        }
    }
    throw GeometryError("shift vector not generic; reseed");
}

ParallelepipedPoints parallelepiped_points(const ShiftedSimplicialCone& c) {
    const std::size_t n = c.shift.size();
    const std::size_t d = c.generators.size();
    ParallelepipedPoints out{{}, &c};

    RatVector lo = c.shift;
    RatVector hi = c.shift;
    for (const auto& g : c.generators) {
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(g[i]) < 0) {
                lo[i] += g[i];
            } else {
                hi[i] += g[i];
            }
        }
    }
    const auto box = integer_hull_box(lo, hi);
    if (!box) {
        return out;
    }
    const RatMatrix cols = columns_of(c.generators);
    if (d == n) {
        // lambda = adj (a - w) / D with adj = D G^{-1} integral, D = |det G| > 0,
        // so each bound reduces to comparing the integer adj_i a with adj_i w.
        const auto inv = inverse(cols);
        if (!inv) {
            throw UsageError("parallelepiped_points: generators are dependent");
        }
        const Int dd = abs(det(cols).get_num());
        std::vector<IntVector> adj(n, IntVector(n));
        std::vector<Rat> low(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                adj[r][k] = Rat((*inv)[r][k] * dd).get_num();
            }
            low[r] = dot(std::span<const Int>(adj[r]), std::span<const Rat>(c.shift));
        }
        box->for_each([&](const IntVector& a) {
            for (std::size_t r = 0; r < n; ++r) {
                const Int y = dot(std::span<const Int>(adj[r]), std::span<const Int>(a));
                const bool inside = c.open_mask[r] ? (y > low[r] && y <= low[r] + dd)
                                                   : (y >= low[r] && y < low[r] + dd);
                if (!inside) {
                    return;
                }
            }
            out.points.push_back(a);
        });
        return out;
    }
    box->for_each([&](const IntVector& a) {
        const RatVector rel = sub(to_rat(a), c.shift);
        std::optional<RatVector> lambda;
        if (d == 0) {
            lambda = is_zero(rel) ? std::optional<RatVector>(RatVector{}) : std::nullopt;
        } else {
            lambda = solve_linear(cols, rel);
        }
        if (lambda && in_half_open_box(*lambda, c.open_mask)) {
            out.points.push_back(a);
        }
    });
    return out;
}

bool generators_contain_line(const std::vector<IntVector>& generators) {
    if (generators.empty()) {
        return false;
    }
    const std::size_t n = generators.front().size();
    bool found = false;
    for (std::size_t k = 2; k <= std::min(n + 1, generators.size()) && !found; ++k) {
        for_each_combination(generators.size(), k, [&](std::span<const std::size_t> pick) {
            if (found) {
                return;
            }
            RatMatrix cols(n, RatVector(k));
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t i = 0; i < n; ++i) {
                    cols[i][j] = generators[pick[j]][i];
                }
            }
            const auto ker = kernel_basis(cols, k);
            if (ker.size() != 1) {
                return;
            }
            const auto& lam = ker.front();
            const bool all_pos = std::all_of(lam.begin(), lam.end(),
                                             [](const Rat& r) { return sgn(r) > 0; });
            const bool all_neg = std::all_of(lam.begin(), lam.end(),
                                             [](const Rat& r) { return sgn(r) < 0; });
            found = all_pos || all_neg;
        });
    }
    return found;
}

bool contains_line(const Cone& c) {
    if (c.has_hrep) {
        return rank(rows_of(c.halfspaces)) < c.ambient_dim;
    }
    return generators_contain_line(c.generators);
}

} // namespace brion
