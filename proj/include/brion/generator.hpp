#pragma once

#include "brion/polytope.hpp"

#include <cstdint>

namespace brion {

struct GenSpec {
    int dim = 2;
    int num_points = 6;
    long coord_bound = 4;
    /// Coordinates become k/4 instead of integers.
    bool rational_vertices = false;
    std::uint64_t seed = 1;
};

/// Hull of num_points points drawn uniformly from [-bound, bound]^dim,
/// redrawn until full-dimensional. Deterministic per seed.
Polytope random_polytope(const GenSpec& spec);

} // namespace brion
