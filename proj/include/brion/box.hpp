#pragma once

#include "brion/geom_core.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace brion {

/// Axis-aligned integer box [lo, hi] (inclusive on both ends).
struct Box {
    IntVector lo;
    IntVector hi;

    Box() = default;
    /// Throws UsageError unless lo <= hi coordinatewise.
    Box(IntVector lo_, IntVector hi_);

    std::size_t dim() const { return lo.size(); }
    bool contains(std::span<const Int> a) const;
    /// Number of lattice points in the box.
    Int point_count() const;
    Box shifted(std::span<const Int> b) const;
    /// Visits every lattice point in lexicographic order.
    void for_each(const std::function<void(const IntVector&)>& visit) const;

    friend bool operator==(const Box&, const Box&) = default;
};

/// Grammar: comma-separated "lo..hi" ranges, one per dimension.
Box parse_box(std::string_view text);
std::string to_string(const Box& box);

/// Smallest integer box containing the rational box [lo, hi]; coordinates
/// where the rational interval holds no integer yield an empty optional.
std::optional<Box> integer_hull_box(std::span<const Rat> lo, std::span<const Rat> hi);

} // namespace brion
