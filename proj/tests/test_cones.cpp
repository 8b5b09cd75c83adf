#include "brion/cones.hpp"
#include "brion/face_complexes.hpp"
#include "brion/generator.hpp"
#include "brion/random.hpp"
#include "brion/series.hpp"
#include "brion/sigma.hpp"

#include "doctest.h"

using namespace brion;

namespace {

RatVector rv(std::initializer_list<long> xs) {
    RatVector v;
    for (auto x : xs) {
        v.emplace_back(x);
    }
    return v;
}

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (auto x : xs) {
        v.emplace_back(x);
    }
    return v;
}

std::size_t vertex_at(const Polytope& p, const RatVector& v) {
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        if (p.vertices()[i] == v) {
            return p.vertex_face(i);
        }
    }
    FAIL("no such vertex");
    return 0;
}

Polytope segment02() { return Polytope::hull({rv({0}), rv({2})}); }
Polytope unit_square() { return Polytope::hull({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}); }

std::vector<IntVector> sorted_rays(std::vector<IntVector> r) {
    std::sort(r.begin(), r.end(), LexLess{});
    return r;
}

// Coordinates of x in the basis gens, or nullopt.
std::optional<RatVector> coords(const std::vector<IntVector>& gens, const RatVector& x) {
    return solve_linear(transpose(rows_of(gens)), x);
}

std::vector<std::vector<IntVector>> cell_generators(const std::vector<IntVector>& rays,
                                                    const Triangulation& cells) {
    std::vector<std::vector<IntVector>> out;
    for (const auto& cell : cells) {
        std::vector<IntVector> g;
        for (auto i : cell) {
            g.push_back(rays[i]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

TEST_CASE("barrier cones") {
    const auto seg = segment02();
    {
        const auto c = barrier_cone(seg, vertex_at(seg, rv({0})));
        CHECK(c.generators == std::vector<IntVector>{iv({1})});
        CHECK(c.pointed);
        CHECK(c.contains(rv({5})));
        CHECK_FALSE(c.contains(rv({-1})));
    }
    {
        const auto c = barrier_cone(seg, vertex_at(seg, rv({2})));
        CHECK(c.generators == std::vector<IntVector>{iv({-1})});
        CHECK(c.contains(rv({-5})));
        CHECK_FALSE(c.contains(rv({1})));
    }
    {
        const auto c = barrier_cone(seg, seg.whole_face());
        CHECK(c.halfspaces.empty());
        CHECK_FALSE(c.pointed);
        CHECK(contains_line(c));
    }
    CHECK_THROWS_AS(barrier_cone(seg, 99), UsageError);
}

TEST_CASE("memberships") {
    const auto seg = segment02();
    const auto v0 = vertex_at(seg, rv({0}));
    const auto v2 = vertex_at(seg, rv({2}));
    CHECK_FALSE(tangent_membership(seg, v2, iv({5})));
    CHECK(tangent_membership(seg, v2, iv({2})));
    CHECK(tangent_membership(seg, v0, iv({5})));
    CHECK(tangent_membership(seg, seg.whole_face(), iv({-100})));

    CHECK(barrier_membership(seg, v2, iv({0})));
    CHECK_FALSE(barrier_membership(seg, v2, iv({1})));
    const auto sq = unit_square();
    CHECK(barrier_membership(sq, vertex_at(sq, rv({0, 0})), iv({3, 7})));

    CHECK(neg_shift_membership(seg, v2, iv({-2})));
    CHECK(neg_shift_membership(seg, v2, iv({-3})));
    CHECK_FALSE(neg_shift_membership(seg, v2, iv({-1})));
    CHECK(neg_shift_membership(seg, v0, iv({0})));
}

TEST_CASE("extreme rays") {
    CHECK(extreme_rays(segment02(), vertex_at(segment02(), rv({0}))) ==
          std::vector<IntVector>{iv({1})});
    const auto sq = unit_square();
    CHECK(sorted_rays(extreme_rays(sq, vertex_at(sq, rv({1, 1})))) ==
          std::vector<IntVector>{iv({-1, 0}), iv({0, -1})});
    const auto tri = Polytope::hull({rv({0, 0}), rv({2, 0}), rv({0, 3})});
    CHECK(sorted_rays(extreme_rays(tri, vertex_at(tri, rv({2, 0})))) ==
          std::vector<IntVector>{iv({-2, 3}), iv({-1, 0})});
    CHECK_THROWS_AS(extreme_rays(sq, sq.whole_face()), UsageError);
}

TEST_CASE("triangulation") {
    SUBCASE("simplicial input is a single cell") {
        const std::vector<IntVector> rays{iv({1, 0}), iv({1, 2})};
        CHECK(triangulate(rays) == Triangulation{{0, 1}});
        CHECK(triangulate({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}) ==
              Triangulation{{0, 1, 2}});
    }
    SUBCASE("cone over a square") {
        const std::vector<IntVector> rays{iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}),
                                          iv({1, 1, 1})};
        const auto cells = triangulate(rays);
        REQUIRE(cells.size() == 2);
        const auto gens = cell_generators(rays, cells);
        for (const auto& g : gens) {
            CHECK(rank(rows_of(g)) == 3);
        }
        std::vector<std::size_t> shared;
        std::set_intersection(cells[0].begin(), cells[0].end(), cells[1].begin(), cells[1].end(),
                              std::back_inserter(shared));
        CHECK(shared.size() == 2);

        // Grid sampling: the cells cover the cone, and no point is interior to both.
        for (int x = -2; x <= 6; ++x) {
            for (int y = -2; y <= 6; ++y) {
                for (int z = 0; z <= 4; ++z) {
                    const RatVector pt{make_rat(Int(x), Int(2)), make_rat(Int(y), Int(2)), Rat(z)};
                    const bool in_cone = sgn(pt[0]) >= 0 && sgn(pt[1]) >= 0 && pt[0] <= pt[2] &&
                                         pt[1] <= pt[2];
                    int in_cells = 0;
                    int interior = 0;
                    for (const auto& g : gens) {
                        const auto l = coords(g, pt);
                        REQUIRE(l);
                        if (std::all_of(l->begin(), l->end(), [](const Rat& r) { return sgn(r) >= 0; })) {
                            ++in_cells;
                        }
                        if (std::all_of(l->begin(), l->end(), [](const Rat& r) { return sgn(r) > 0; })) {
                            ++interior;
                        }
                    }
                    CHECK((in_cells > 0) == in_cone);
                    CHECK(interior <= 1);
                }
            }
        }
    }
    SUBCASE("cone containing a line") {
        CHECK_THROWS_WITH_AS(triangulate({iv({1, 0}), iv({-1, 0}), iv({0, 1})}),
                             "cannot triangulate cone containing a line", GeometryError);
    }
}

TEST_CASE("half-open decomposition") {
    SUBCASE("single cell is closed") {
        const std::vector<std::vector<IntVector>> cells{{iv({1, 0}), iv({0, 1})}};
        const auto h = half_open_decompose(cells, rv({1, 1}));
        REQUIRE(h.size() == 1);
        CHECK(h[0].open_mask == std::vector<bool>{false, false});
        CHECK_THROWS_WITH_AS(half_open_decompose(cells, rv({1, 0})),
                             "shift vector not generic; reseed", GeometryError);
    }
    SUBCASE("square cone: each lattice point lies in exactly one cell") {
        const std::vector<IntVector> rays{iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}),
                                          iv({1, 1, 1})};
        const auto gens = cell_generators(rays, triangulate(rays));
        const auto xi = generic_point(gens, 42);
        const auto h = half_open_decompose(gens, xi);
        CHECK(std::count(h[0].open_mask.begin(), h[0].open_mask.end(), true) == 0);
        CHECK(std::count(h[1].open_mask.begin(), h[1].open_mask.end(), true) == 1);
        Box({-1, -1, 0}, {6, 6, 5}).for_each([&](const IntVector& a) {
            const bool in_cone = sgn(a[0]) >= 0 && sgn(a[1]) >= 0 && a[0] <= a[2] && a[1] <= a[2];
            const auto count = std::count_if(h.begin(), h.end(),
                                             [&](const auto& c) { return c.contains(a); });
            CHECK(count == (in_cone ? 1 : 0));
        });
    }
    SUBCASE("vertex cones of random polytopes") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            const auto p = random_polytope({3, 8, 3, false, seed});
            const Box box = default_box(p, 1);
            for (std::size_t v = 0; v < p.vertices().size(); ++v) {
                const auto vf = p.vertex_face(v);
                const auto d = decompose_vertex_cone(p, vf, ShiftMode::unshifted, seed);
                box.for_each([&](const IntVector& a) {
                    const auto count = std::count_if(d.half_open.begin(), d.half_open.end(),
                                                     [&](const auto& c) { return c.contains(a); });
                    CHECK(count == (barrier_membership(p, vf, a) ? 1 : 0));
                });
            }
        }
    }
}

TEST_CASE("parallelepiped points") {
    {
        const ShiftedSimplicialCone c{rv({0, 0}), {iv({1, 0}), iv({0, 1})}, {false, false}};
        CHECK(parallelepiped_points(c).points == std::vector<IntVector>{iv({0, 0})});
    }
    {
        const ShiftedSimplicialCone c{rv({0, 0}), {iv({1, 0}), iv({1, 2})}, {false, false}};
        CHECK(parallelepiped_points(c).points == std::vector<IntVector>{iv({0, 0}), iv({1, 1})});
    }
    {
        const ShiftedSimplicialCone c{rv({2}), {iv({-1})}, {false}};
        CHECK(parallelepiped_points(c).points == std::vector<IntVector>{iv({2})});
    }
    {
        const ShiftedSimplicialCone c{rv({0, 0}), {iv({1, 0}), iv({0, 1})}, {true, true}};
        CHECK(parallelepiped_points(c).points == std::vector<IntVector>{iv({1, 1})});
    }

    Rng rng(77);
    int tested = 0;
    while (tested < 60) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<IntVector> gens(n, IntVector(n));
        for (auto& g : gens) {
            for (auto& x : g) {
                x = rng.uniform(-4, 4);
            }
        }
        const Rat dt = det(rows_of(gens));
        if (sgn(dt) == 0) {
            continue;
        }
        ++tested;
        ShiftedSimplicialCone c;
        for (std::size_t i = 0; i < n; ++i) {
            c.shift.push_back(make_rat(Int(rng.uniform(-9, 9)), Int(rng.uniform(1, 4))));
            c.open_mask.push_back(rng.uniform(0, 1) == 1);
        }
        c.generators = gens;
        const auto pts = parallelepiped_points(c).points;
        CHECK(Int(pts.size()) == abs(dt.get_num()));
        for (const auto& a : pts) {
            CHECK(c.contains(a));
        }
    }
}

TEST_CASE("lines in cones") {
    const auto sq = unit_square();
    for (auto f : sq.proper_faces()) {
        CHECK(contains_line(barrier_cone(sq, f)) == (sq.face(f).dim == 1));
    }
    CHECK(contains_line(barrier_cone(sq, sq.whole_face())));
    CHECK(generators_contain_line({iv({1, 1}), iv({-1, 0}), iv({0, -1})}));
    CHECK_FALSE(generators_contain_line({iv({1, 0}), iv({1, 1}), iv({0, 1})}));
    CHECK_FALSE(generators_contain_line({}));
}

TEST_CASE("cone memberships agree with polytope structure") {
    Rng rng(2024);
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            const auto p = random_polytope({n, 3 + 2 * n, 3, false, seed * 7});
            const Box box = default_box(p, 1);
            box.for_each([&](const IntVector& a) {
                const RatVector ar = to_rat(a);
                bool all_tangent = true;
                std::optional<FacePartition> vis;
                if (!p.contains(ar)) {
                    vis = classify_visible(p, ar);
                }
                std::optional<FacePartition> up;
                if (!is_zero(a)) {
                    up = classify_lower(p, negate(ar));
                }
                for (auto f : p.proper_faces()) {
                    const bool t = tangent_membership(p, f, a);
                    all_tangent = all_tangent && t;
                    CHECK(t == barrier_membership(p, f, sub(ar, p.representative_point(f))));
                    if (vis) {
                        CHECK(t == vis->second.contains(f));
                    }
                    if (up) {
                        CHECK(barrier_membership(p, f, a) == up->second.contains(f));
                    }
                }
                CHECK(all_tangent == p.contains(ar));
                CHECK(barrier_membership(p, p.whole_face(), a));
            });
        }
    }
}
