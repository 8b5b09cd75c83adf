#pragma once

#include "brion/cones.hpp"
#include "brion/polytope.hpp"
#include "brion/random.hpp"
#include "brion/series.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace brion {

/// (sum_p x^p) / prod_g (1 - x^g) for one half-open simplicial cell.
struct SigmaTerm {
    std::vector<IntVector> numerator;
    std::vector<IntVector> denominator;
};

/// Sum of SigmaTerms: the rational function sigma(w + C) of a pointed cone.
struct SigmaRep {
    std::vector<SigmaTerm> terms;
};

/// Which translate of the vertex cone C_v is represented.
enum class ShiftMode { shifted_by_v, unshifted, shifted_by_neg_v };

std::string_view to_string(ShiftMode m);
/// Accepts "v", "0", "-v".
ShiftMode parse_shift_mode(std::string_view text);

/// Every intermediate of the vertex-cone construction, for reporting.
struct VertexConeDecomposition {
    std::size_t vertex_face = 0;
    ShiftMode mode = ShiftMode::unshifted;
    RatVector shift;
    std::vector<IntVector> rays;
    Triangulation cells;
    RatVector xi;
    std::vector<ShiftedSimplicialCone> half_open;
    SigmaRep rep;
};

inline constexpr std::uint64_t default_decomposition_seed = 0x5eed;

VertexConeDecomposition decompose_vertex_cone(const Polytope& p, std::size_t vertex_face,
                                              ShiftMode mode,
                                              std::uint64_t seed = default_decomposition_seed);

/// sigma(w + C_v) with w = v, 0 or -v.
SigmaRep sigma_vertex_cone(const Polytope& p, std::size_t vertex_face, ShiftMode mode,
                           std::uint64_t seed = default_decomposition_seed);

/// Absent when C_F contains a line (its series sums to zero),
/// otherwise the vertex-cone representation.
std::optional<SigmaRep> phi_of_cone(const Polytope& p, std::size_t face, ShiftMode mode,
                                    std::uint64_t seed = default_decomposition_seed);

/// t^a, for t with non-zero coordinates.
Rat monomial(std::span<const Rat> t, std::span<const Int> a);

/// No denominator factor of `s` vanishes at t, and t has no zero coordinate.
bool admissible(const SigmaRep& s, std::span<const Rat> t);

/// Exact value at t. Throws GeometryError("evaluation point hits pole
/// locus; reseed") when t is not admissible.
Rat eval_sigma(const SigmaRep& s, std::span<const Rat> t);

/// sum over lattice points of P of t^a.
Rat polytope_poly_eval(const Polytope& p, std::span<const Rat> t);
/// sum over lattice points of int(-P) of t^a.
Rat interior_neg_poly_eval(const Polytope& p, std::span<const Rat> t);

/// Expands every term into numerator points plus non-negative integer
/// combinations of its denominator generators, truncated to `box`.
TruncatedSeries expand_truncated(const SigmaRep& s, const Box& box);

enum class BrionVariant { P, one, intP };

std::string_view to_string(BrionVariant v);
BrionVariant parse_brion_variant(std::string_view text);
ShiftMode mode_for(BrionVariant v);

struct TrialFailure {
    RatVector point;
    Rat lhs;
    Rat rhs;
};

struct BrionReport {
    BrionVariant variant = BrionVariant::P;
    int trials = 0;
    std::uint64_t seed = 0;
    bool ok = true;
    std::vector<TrialFailure> failures; // by trial index
};

/// Random evaluation point with coordinates p/q, p and q odd in [3, 97].
RatVector draw_eval_point(Rng& rng, std::size_t dim);

BrionReport check_brion(const Polytope& p, BrionVariant variant, int trials, std::uint64_t seed);

} // namespace brion
