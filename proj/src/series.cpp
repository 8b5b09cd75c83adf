#include "brion/series.hpp"

#include "brion/cones.hpp"

namespace brion {

Int TruncatedSeries::coefficient(const IntVector& a) const {
    const auto it = coeffs_.find(a);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add(const IntVector& a, const Int& c) {
    if (!box_.contains(a)) {
        throw UsageError("series coefficient " + to_string(a) + " outside box " +
                         to_string(box_));
    }
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            coeffs_.erase(it);
        }
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (!(other.box_ == box_)) {
        throw UsageError("adding series over different boxes");
    }
    for (const auto& [a, c] : other.coeffs_) {
        add(a, c);
    }
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(box_);
    for (const auto& [a, c] : coeffs_) {
        out.coeffs_.emplace(a, -c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::restricted(const Box& sub) const {
    for (std::size_t i = 0; i < sub.dim(); ++i) {
        if (sub.lo[i] < box_.lo[i] || sub.hi[i] > box_.hi[i]) {
            throw UsageError("restriction box " + to_string(sub) + " is not inside " +
                             to_string(box_));
        }
    }
    TruncatedSeries out(sub);
    for (const auto& [a, c] : coeffs_) {
        if (sub.contains(a)) {
            out.coeffs_.emplace(a, c);
        }
    }
    return out;
}

TruncatedSeries series_of(const LatticePredicate& member, const Box& box) {
    TruncatedSeries s(box);
    box.for_each([&](const IntVector& a) {
        if (member(a)) {
            s.add(a, 1);
        }
    });
    return s;
}

TruncatedSeries translate_series(const TruncatedSeries& s, std::span<const Int> b) {
    TruncatedSeries out(s.box().shifted(b));
    for (const auto& [a, c] : s.coefficients()) {
        IntVector moved = a;
        for (std::size_t i = 0; i < moved.size(); ++i) {
            moved[i] += b[i];
        }
        out.add(moved, c);
    }
    return out;
}

std::string_view to_string(GramVariant v) {
    switch (v) {
    case GramVariant::tangent:
        return "P";
    case GramVariant::barrier:
        return "one";
    case GramVariant::negshift:
        return "intP";
    }
    return "P";
}

GramVariant parse_gram_variant(std::string_view text) {
    if (text == "P" || text == "tangent") {
        return GramVariant::tangent;
    }
    if (text == "one" || text == "barrier") {
        return GramVariant::barrier;
    }
    if (text == "intP" || text == "negshift") {
        return GramVariant::negshift;
    }
    throw UsageError("unknown variant '" + std::string(text) + "' (expected P, one or intP)");
}

TruncatedSeries gram_lhs(const Polytope& p, const Box& box, GramVariant variant) {
    if (box.dim() != p.dim()) {
        throw UsageError("box dimension does not match polytope dimension");
    }
    // Precompute representative points once; membership in -F + C_F is
    // a + f0 in C_F.
    std::vector<RatVector> reps;
    if (variant == GramVariant::negshift) {
        for (std::size_t f = 0; f < p.faces().size(); ++f) {
            reps.push_back(p.representative_point(f));
        }
    }
    TruncatedSeries s(box);
    box.for_each([&](const IntVector& a) {
        const RatVector ar = to_rat(a);
        Int coeff = 0;
        for (std::size_t f = 0; f < p.faces().size(); ++f) {
            bool member = false;
            switch (variant) {
            case GramVariant::tangent:
                member = tangent_membership(p, f, std::span<const Rat>(ar));
                break;
            case GramVariant::barrier:
                member = barrier_membership(p, f, std::span<const Rat>(ar));
                break;
            case GramVariant::negshift:
                member = barrier_membership(p, f, std::span<const Rat>(brion::add(ar, reps[f])));
                break;
            }
            if (member) {
                coeff += (p.face(f).dim % 2 == 0) ? 1 : -1;
            }
        }
        s.add(a, coeff);
    });
    return s;
}

TruncatedSeries gram_rhs(const Polytope& p, const Box& box, GramVariant variant) {
    switch (variant) {
    case GramVariant::tangent:
        return series_of([&](const IntVector& a) { return p.contains(std::span<const Int>(a)); },
                         box);
    case GramVariant::barrier:
        return series_of([](const IntVector& a) { return is_zero(std::span<const Int>(a)); },
                         box);
    case GramVariant::negshift: {
        // int(-P) = -int(P)
        auto s = series_of(
            [&](const IntVector& a) {
                return p.interior_contains(std::span<const Int>(negate(std::span<const Int>(a))));
            },
            box);
        return p.dim() % 2 == 0 ? s : -s;
    }
    }
    return TruncatedSeries(box);
}

GramReport check_gram(const Polytope& p, const Box& box, GramVariant variant) {
    const auto lhs = gram_lhs(p, box, variant);
    const auto rhs = gram_rhs(p, box, variant);
    GramReport report{variant, box, true, {}};
    box.for_each([&](const IntVector& a) {
        const Int l = lhs.coefficient(a);
        const Int r = rhs.coefficient(a);
        if (l != r) {
            report.mismatches.push_back({a, l, r});
        }
    });
    report.ok = report.mismatches.empty();
    return report;
}

Box default_box(const Polytope& p, long pad) {
    const auto lo = p.lower_corner();
    const auto hi = p.upper_corner();
    IntVector l;
    IntVector h;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        // -P spans [-hi, -lo]
        const Rat low = std::min(lo[i], Rat(-hi[i]));
        const Rat high = std::max(hi[i], Rat(-lo[i]));
        l.push_back(floor_rat(low) - pad);
        h.push_back(ceil_rat(high) + pad);
    }
    return Box(std::move(l), std::move(h));
}

} // namespace brion
