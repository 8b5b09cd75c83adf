#include "brion/face_complexes.hpp"
#include "brion/generator.hpp"
#include "brion/random.hpp"

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

Polytope segment02() { return Polytope::hull({rv({0}), rv({2})}); }
Polytope unit_square() { return Polytope::hull({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}); }

std::size_t vertex_index(const Polytope& p, const RatVector& v) {
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        if (p.vertices()[i] == v) {
            return p.vertex_face(i);
        }
    }
    FAIL("no such vertex");
    return 0;
}

// Face whose vertex set is exactly the given vertices.
std::size_t face_with(const Polytope& p, std::initializer_list<RatVector> vs) {
    std::vector<std::size_t> idx;
    for (const auto& v : vs) {
        idx.push_back(p.face(vertex_index(p, v)).vertices.front());
    }
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 0; i < p.faces().size(); ++i) {
        if (p.face(i).vertices == idx) {
            return i;
        }
    }
    FAIL("no such face");
    return 0;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Exact ray test: is p + lambda * dir in P for some lambda > 0?
bool ray_enters(const Polytope& p, const RatVector& start, const RatVector& dir) {
    std::optional<Rat> lambda_max;
    for (const auto& f : p.facets()) {
        const Rat slope = dot(f.normal, dir);
        if (sgn(slope) < 0) {
            const Rat lim = (dot(f.normal, start) - f.offset) / -slope;
            if (!lambda_max || lim < *lambda_max) {
                lambda_max = lim;
            }
        }
    }
    const Rat lambda = lambda_max ? *lambda_max / 2 : Rat(1);
    if (lambda_max && sgn(*lambda_max) == 0) {
        return false;
    }
    CHECK(p.contains(add(start, scale(dir, lambda))));
    return true;
}

RatVector random_rat_point(Rng& rng, std::size_t n, long bound) {
    RatVector x;
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(make_rat(Int(static_cast<long>(rng.uniform(-bound * 2, bound * 2))), Int(2)));
    }
    return x;
}

void check_partition(const FacePartition& part, const Polytope& p) {
    const auto& [a, b] = part;
    CHECK(!a.members.empty());
    CHECK(!b.members.empty());
    std::vector<std::size_t> all = a.members;
    all.insert(all.end(), b.members.begin(), b.members.end());
    CHECK(sorted(all) == p.proper_faces());
    CHECK(is_subcomplex(a));
    CHECK(is_order_filter(b));
    CHECK(euler_char(a) == 1);
    CHECK(euler_char(a) + euler_char(b) == euler_char(boundary_complex(p)));
}

} // namespace

TEST_CASE("visible faces") {
    const auto seg = segment02();
    {
        auto [vis, inv] = classify_visible(seg, rv({3}));
        CHECK(vis.members == std::vector<std::size_t>{vertex_index(seg, rv({2}))});
        CHECK(inv.members == std::vector<std::size_t>{vertex_index(seg, rv({0}))});
        CHECK(vis.kind == SubsetKind::visible);
    }
    const auto sq = unit_square();
    {
        auto [vis, inv] = classify_visible(sq, RatVector{Rat(2), Rat(1, 2)});
        CHECK(vis.members == sorted({face_with(sq, {rv({1, 0}), rv({1, 1})}),
                                     vertex_index(sq, rv({1, 0})), vertex_index(sq, rv({1, 1}))}));
    }
    {
        auto [vis, inv] = classify_visible(sq, rv({2, 2}));
        CHECK(vis.size() == 5);
        CHECK(euler_char(vis) == 1);
    }
    CHECK_THROWS_WITH_AS(classify_visible(sq, RatVector{Rat(1, 2), Rat(1, 2)}),
                         "classification undefined: point inside polytope", GeometryError);
    CHECK_THROWS_AS(classify_visible(sq, rv({1, 1})), GeometryError);
}

TEST_CASE("back faces") {
    const auto seg = segment02();
    {
        auto [back, front] = classify_back(seg, rv({3}));
        CHECK(back.members == std::vector<std::size_t>{vertex_index(seg, rv({0}))});
        CHECK(front.members == std::vector<std::size_t>{vertex_index(seg, rv({2}))});
    }
    {
        // x on the boundary: the facet through x is front.
        auto [back, front] = classify_back(seg, rv({0}));
        CHECK(back.members == std::vector<std::size_t>{vertex_index(seg, rv({2}))});
        CHECK(front.members == std::vector<std::size_t>{vertex_index(seg, rv({0}))});
    }
    const auto sq = unit_square();
    {
        auto [back, front] = classify_back(sq, RatVector{Rat(1, 2), Rat(2)});
        // Only the top edge faces x.
        CHECK(front.members == std::vector<std::size_t>{face_with(sq, {rv({0, 1}), rv({1, 1})})});
        CHECK(back.size() == 7);
        CHECK(euler_char(back) == 1);
    }
    CHECK_THROWS_AS(classify_back(sq, RatVector{Rat(1, 2), Rat(1, 2)}), GeometryError);
}

TEST_CASE("lower faces") {
    const auto seg = segment02();
    {
        auto [low, up] = classify_lower(seg, rv({1}));
        CHECK(low.members == std::vector<std::size_t>{vertex_index(seg, rv({0}))});
        CHECK(up.members == std::vector<std::size_t>{vertex_index(seg, rv({2}))});
    }
    const auto sq = unit_square();
    {
        auto [low, up] = classify_lower(sq, rv({1, 1}));
        CHECK(low.members == sorted({face_with(sq, {rv({0, 0}), rv({0, 1})}),
                                     face_with(sq, {rv({0, 0}), rv({1, 0})}),
                                     vertex_index(sq, rv({0, 0})), vertex_index(sq, rv({0, 1})),
                                     vertex_index(sq, rv({1, 0}))}));
    }
    {
        // Horizontal facets have <d, u> = 0 and are upper.
        auto [low, up] = classify_lower(sq, rv({1, 0}));
        CHECK(low.members == sorted({face_with(sq, {rv({0, 0}), rv({0, 1})}),
                                     vertex_index(sq, rv({0, 0})), vertex_index(sq, rv({0, 1}))}));
    }
    CHECK_THROWS_WITH_AS(classify_lower(sq, rv({0, 0})), "direction must be non-zero",
                         UsageError);
}

TEST_CASE("Euler characteristics") {
    const auto sq = unit_square();
    CHECK(euler_char(boundary_complex(sq)) == 0);
    std::vector<std::size_t> all(sq.faces().size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    CHECK(euler_char(sq, all) == 1);
    CHECK(euler_char(FaceSubset{}) == 0);
    CHECK(euler_char(FaceSubset{&sq, {}, SubsetKind::custom}) == 0);

    // chi of the boundary complex is 1 - (-1)^n.
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto p = random_polytope({n, 3 + 2 * n, 4, false, seed});
            CHECK(euler_char(boundary_complex(p)) == 1 - (n % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("classification invariants on random inputs") {
    Rng rng(31337);
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const auto p = random_polytope({n, 3 + 2 * n, 4, false, seed * 13 + 5});
            const auto nn = static_cast<std::size_t>(n);

            RatVector x = random_rat_point(rng, nn, 6);
            while (p.contains(x)) {
                x = random_rat_point(rng, nn, 6);
            }
            const auto vis = classify_visible(p, x);
            check_partition(vis, p);
            const auto back = classify_back(p, x);
            check_partition(back, p);

            // Boundary points (vertices) are valid for Back/Front.
            const auto& v = p.vertices()[seed % p.vertices().size()];
            check_partition(classify_back(p, v), p);

            RatVector d = random_rat_point(rng, nn, 3);
            while (is_zero(d)) {
                d = random_rat_point(rng, nn, 3);
            }
            const auto low = classify_lower(p, d);
            check_partition(low, p);

            // Ray definitions evaluated on relative-interior points.
            for (auto f : p.proper_faces()) {
                const auto q = p.representative_point(f);
                CHECK(vis.first.contains(f) == !ray_enters(p, q, sub(x, q)));
                CHECK(back.first.contains(f) == !ray_enters(p, q, sub(q, x)));
                CHECK(low.first.contains(f) == !ray_enters(p, q, negate(d)));
            }
        }
    }
}
