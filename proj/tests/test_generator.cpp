#include "brion/generator.hpp"

#include "doctest.h"

using namespace brion;

TEST_CASE("generated polytopes are reproducible") {
    for (int n = 1; n <= 3; ++n) {
        const GenSpec spec{n, 3 + 2 * n, 4, false, 99};
        const auto a = random_polytope(spec);
        const auto b = random_polytope(spec);
        CHECK(a.vertices() == b.vertices());
        CHECK(a.faces().size() == b.faces().size());
    }
    const auto a = random_polytope({2, 6, 4, false, 1});
    const auto b = random_polytope({2, 6, 4, false, 2});
    CHECK(a.vertices() != b.vertices());
}

TEST_CASE("generated polytopes respect the spec") {
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            for (bool rational : {false, true}) {
                const GenSpec spec{n, 2 + 2 * n, 4, rational, seed};
                const auto p = random_polytope(spec);
                CHECK(p.dim() == static_cast<std::size_t>(n));
                CHECK(p.vertices().size() <= static_cast<std::size_t>(spec.num_points));
                CHECK(p.vertices().size() >= static_cast<std::size_t>(n + 1));
                for (const auto& v : p.vertices()) {
                    for (const auto& x : v) {
                        CHECK(abs(x) <= 4);
                        if (rational) {
                            CHECK(Int(4) % x.get_den() == 0);
                        } else {
                            CHECK(x.get_den() == 1);
                        }
                    }
                }
            }
        }
    }
    const auto seg = random_polytope({1, 2, 4, false, 5});
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.vertices()[0] != seg.vertices()[1]);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(random_polytope({0, 4, 4, false, 1}), UsageError);
    CHECK_THROWS_AS(random_polytope({4, 8, 4, false, 1}), UsageError);
    CHECK_THROWS_AS(random_polytope({2, 2, 4, false, 1}), UsageError);
    CHECK_THROWS_AS(random_polytope({2, 6, 0, false, 1}), UsageError);
}
