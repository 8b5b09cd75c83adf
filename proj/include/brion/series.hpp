#pragma once

#include "brion/box.hpp"
#include "brion/polytope.hpp"

#include <functional>
#include <map>
#include <string_view>
#include <vector>

namespace brion {

struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Formal Laurent series truncated to a box: sparse integer coefficients,
/// absent key = 0. Zero coefficients are never stored.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(Box box) : box_(std::move(box)) {}

    const Box& box() const { return box_; }
    const std::map<IntVector, Int, LexLess>& coefficients() const { return coeffs_; }

    Int coefficient(const IntVector& a) const;
    /// Adds `c` to the coefficient at `a`; throws UsageError outside the box.
    void add(const IntVector& a, const Int& c);

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries operator-() const;
    /// Restriction to a sub-box.
    TruncatedSeries restricted(const Box& sub) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.box_ == b.box_ && a.coeffs_ == b.coeffs_;
    }

  private:
    Box box_;
    std::map<IntVector, Int, LexLess> coeffs_;
};

using LatticePredicate = std::function<bool(const IntVector&)>;

/// S(K) truncated: coefficient 1 at each box point satisfying `member`.
TruncatedSeries series_of(const LatticePredicate& member, const Box& box);

/// x^b * s, with the box moved along.
TruncatedSeries translate_series(const TruncatedSeries& s, std::span<const Int> b);

/// The three sums over F(P)_0 of (-1)^dim F S(X_F):
/// tangent X_F = F + C_F, barrier X_F = C_F, negshift X_F = -F + C_F.
enum class GramVariant { tangent, barrier, negshift };

std::string_view to_string(GramVariant v);
/// Accepts "P", "one", "intP" and the long names.
GramVariant parse_gram_variant(std::string_view text);

struct Mismatch {
    IntVector point;
    Int lhs;
    Int rhs;
};

struct GramReport {
    GramVariant variant = GramVariant::tangent;
    Box box;
    bool ok = true;
    std::vector<Mismatch> mismatches; // lexicographic by point
};

TruncatedSeries gram_lhs(const Polytope& p, const Box& box, GramVariant variant);
/// S(P), 1, or (-1)^n S(int(-P)).
TruncatedSeries gram_rhs(const Polytope& p, const Box& box, GramVariant variant);
GramReport check_gram(const Polytope& p, const Box& box, GramVariant variant);

/// Bounding box of P and -P padded by `pad` on every side.
Box default_box(const Polytope& p, long pad = 3);

} // namespace brion
