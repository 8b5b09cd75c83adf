#include "brion/generator.hpp"

#include "brion/random.hpp"

namespace brion {

Polytope random_polytope(const GenSpec& spec) {
    if (spec.dim < 1 || spec.dim > 3) {
        throw UsageError("generator supports dimensions 1 to 3");
    }
    if (spec.num_points < spec.dim + 1) {
        throw UsageError("generator needs at least dim + 1 points");
    }
    if (spec.coord_bound < 1) {
        throw UsageError("coordinate bound must be at least 1");
    }
    constexpr long denominator = 4;
    const long scale = spec.rational_vertices ? denominator : 1;
    Rng rng(spec.seed);
    constexpr int max_attempts = 100;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<RatVector> pts;
        for (int i = 0; i < spec.num_points; ++i) {
            RatVector p;
            for (int c = 0; c < spec.dim; ++c) {
                Rat x(rng.uniform(-spec.coord_bound * scale, spec.coord_bound * scale), scale);
                x.canonicalize();
                p.push_back(x);
            }
            pts.push_back(std::move(p));
        }
        try {
            return Polytope::hull(pts);
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw GeometryError("could not generate a full-dimensional polytope in " +
                        std::to_string(max_attempts) + " attempts");
}

} // namespace brion
