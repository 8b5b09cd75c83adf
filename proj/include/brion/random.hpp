#pragma once

#include <cstdint>
#include <random>

namespace brion {

/// Seeded 64-bit Mersenne Twister with a portable uniform integer draw.
///
/// std::mt19937_64 output is fixed by the standard, but the standard
/// distributions are not, so ranges are sampled here by rejection.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) {
            return static_cast<std::int64_t>(next());
        }
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x = next();
        while (x >= limit) {
            x = next();
        }
        return lo + static_cast<std::int64_t>(x % span);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace brion
