#include "brion/box.hpp"

namespace brion {

Box::Box(IntVector lo_, IntVector hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size()) {
        throw UsageError("box bounds have different dimensions");
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo[i] > hi[i]) {
            throw UsageError("box range " + to_string(lo[i]) + ".." + to_string(hi[i]) +
                             " is empty");
        }
    }
}

bool Box::contains(std::span<const Int> a) const {
    if (a.size() != lo.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < lo[i] || a[i] > hi[i]) {
            return false;
        }
    }
    return true;
}

Int Box::point_count() const {
    Int n = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        n *= hi[i] - lo[i] + 1;
    }
    return n;
}

Box Box::shifted(std::span<const Int> b) const {
    if (b.size() != lo.size()) {
        throw UsageError("box shift has wrong dimension");
    }
    Box out = *this;
    for (std::size_t i = 0; i < b.size(); ++i) {
        out.lo[i] += b[i];
        out.hi[i] += b[i];
    }
    return out;
}

void Box::for_each(const std::function<void(const IntVector&)>& visit) const {
    const std::size_t n = lo.size();
    if (n == 0) {
        visit({});
        return;
    }
    IntVector cur = lo;
    while (true) {
        visit(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
            if (i == 0) {
                return;
            }
        }
    }
}

Box parse_box(std::string_view text) {
    IntVector lo;
    IntVector hi;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto range = text.substr(start, end - start);
        const auto dots = range.find("..");
        if (dots == std::string_view::npos) {
            throw UsageError("malformed box range '" + std::string(range) +
                             "' (expected lo..hi)");
        }
        const Rat l = parse_rat(range.substr(0, dots));
        const Rat h = parse_rat(range.substr(dots + 2));
        if (l.get_den() != 1 || h.get_den() != 1) {
            throw UsageError("box bounds must be integers: '" + std::string(range) + "'");
        }
        lo.push_back(l.get_num());
        hi.push_back(h.get_num());
        start = end + 1;
    }
    return Box(std::move(lo), std::move(hi));
}

std::string to_string(const Box& box) {
    std::string out;
    for (std::size_t i = 0; i < box.dim(); ++i) {
        out += (i ? "," : "") + to_string(box.lo[i]) + ".." + to_string(box.hi[i]);
    }
    return out;
}

std::optional<Box> integer_hull_box(std::span<const Rat> lo, std::span<const Rat> hi) {
    IntVector l;
    IntVector h;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        l.push_back(ceil_rat(lo[i]));
        h.push_back(floor_rat(hi[i]));
        if (l.back() > h.back()) {
            return std::nullopt;
        }
    }
    return Box(std::move(l), std::move(h));
}

} // namespace brion
