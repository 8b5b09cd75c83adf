#include "brion/sigma.hpp"

#include <map>

namespace brion {

namespace {

RatVector shift_for(const Polytope& p, std::size_t vertex_face, ShiftMode mode) {
    const auto& v = p.vertices()[p.face(vertex_face).vertices.front()];
    switch (mode) {
    case ShiftMode::shifted_by_v:
        return v;
    case ShiftMode::unshifted:
        return RatVector(p.dim(), Rat(0));
    case ShiftMode::shifted_by_neg_v:
        return negate(v);
    }
    return v;
}

Rat power(const Rat& base, const Int& exponent) {
    const bool neg = sgn(exponent) < 0;
    const Int magnitude = abs(exponent);
    if (!magnitude.fits_ulong_p()) {
        throw UsageError("exponent out of range");
    }
    const unsigned long e = magnitude.get_ui();
    Int num;
    Int den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rat r = neg ? Rat(den, num) : Rat(num, den);
    r.canonicalize();
    return r;
}

// sum over `points` of t^p, accumulated over the common denominator
// prod d_i^{E_i} so the inner loop only multiplies cached integer powers.
Rat monomial_sum(std::span<const Rat> t, const std::vector<IntVector>& points, bool negated) {
    if (points.empty()) {
        return 0;
    }
    const std::size_t n = t.size();
    std::vector<long> lo(n);
    std::vector<long> hi(n);
    auto exponent = [&](const IntVector& p, std::size_t i) {
        if (!p[i].fits_slong_p()) {
            throw UsageError("exponent out of range");
        }
        const long e = p[i].get_si();
        return negated ? -e : e;
    };
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = hi[i] = exponent(points.front(), i);
        for (const auto& p : points) {
            lo[i] = std::min(lo[i], exponent(p, i));
            hi[i] = std::max(hi[i], exponent(p, i));
        }
    }
    // num_pow[i][k] = n_i^k, den_pow[i][k] = d_i^k for k in [0, E_i].
    std::vector<std::vector<Int>> num_pow(n);
    std::vector<std::vector<Int>> den_pow(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto span = static_cast<std::size_t>(hi[i] - lo[i]);
        num_pow[i].resize(span + 1);
        den_pow[i].resize(span + 1);
        num_pow[i][0] = den_pow[i][0] = 1;
        for (std::size_t k = 1; k <= span; ++k) {
            num_pow[i][k] = num_pow[i][k - 1] * t[i].get_num();
            den_pow[i][k] = den_pow[i][k - 1] * t[i].get_den();
        }
    }
    Int total = 0;
    Int term;
    for (const auto& p : points) {
        term = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const auto e = static_cast<std::size_t>(exponent(p, i) - lo[i]);
            term *= num_pow[i][e];
            term *= den_pow[i][num_pow[i].size() - 1 - e];
        }
        total += term;
    }
    Rat scale_factor = 1;
    for (std::size_t i = 0; i < n; ++i) {
        scale_factor /= den_pow[i].back();
        scale_factor *= power(t[i], Int(lo[i]));
    }
    Rat r(total);
    r *= scale_factor;
    return r;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

std::string_view to_string(ShiftMode m) {
    switch (m) {
    case ShiftMode::shifted_by_v:
        return "v";
    case ShiftMode::unshifted:
        return "0";
    case ShiftMode::shifted_by_neg_v:
        return "-v";
    }
    return "0";
}

ShiftMode parse_shift_mode(std::string_view text) {
    if (text == "v") {
        return ShiftMode::shifted_by_v;
    }
    if (text == "0") {
        return ShiftMode::unshifted;
    }
    if (text == "-v") {
        return ShiftMode::shifted_by_neg_v;
    }
    throw UsageError("unknown mode '" + std::string(text) + "' (expected v, 0 or -v)");
}

VertexConeDecomposition decompose_vertex_cone(const Polytope& p, std::size_t vertex_face,
                                              ShiftMode mode, std::uint64_t seed) {
    VertexConeDecomposition d;
    d.vertex_face = vertex_face;
    d.mode = mode;
    d.rays = extreme_rays(p, vertex_face);
    d.shift = shift_for(p, vertex_face, mode);
    d.cells = triangulate(d.rays);

    std::vector<std::vector<IntVector>> cell_gens;
    for (const auto& cell : d.cells) {
        std::vector<IntVector> gens;
        for (auto i : cell) {
            gens.push_back(d.rays[i]);
        }
        cell_gens.push_back(std::move(gens));
    }
    d.xi = generic_point(cell_gens, seed);
    d.half_open = half_open_decompose(cell_gens, d.xi);
    for (auto& c : d.half_open) {
        c.shift = d.shift;
        d.rep.terms.push_back({parallelepiped_points(c).points, c.generators});
    }
    return d;
}

SigmaRep sigma_vertex_cone(const Polytope& p, std::size_t vertex_face, ShiftMode mode,
                           std::uint64_t seed) {
    return decompose_vertex_cone(p, vertex_face, mode, seed).rep;
}

std::optional<SigmaRep> phi_of_cone(const Polytope& p, std::size_t face, ShiftMode mode,
                                    std::uint64_t seed) {
    if (contains_line(barrier_cone(p, face))) {
        return std::nullopt;
    }
    return sigma_vertex_cone(p, face, mode, seed);
}

Rat monomial(std::span<const Rat> t, std::span<const Int> a) {
    Rat r = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) {
            r *= power(t[i], a[i]);
        }
    }
    return r;
}

bool admissible(const SigmaRep& s, std::span<const Rat> t) {
    for (const auto& x : t) {
        if (sgn(x) == 0) {
            return false;
        }
    }
    for (const auto& term : s.terms) {
        for (const auto& g : term.denominator) {
            if (monomial(t, g) == 1) {
                return false;
            }
        }
    }
    return true;
}

Rat eval_sigma(const SigmaRep& s, std::span<const Rat> t) {
    if (!admissible(s, t)) {
        throw GeometryError("evaluation point hits pole locus; reseed");
    }
    Rat total = 0;
    for (const auto& term : s.terms) {
        const Rat num = monomial_sum(t, term.numerator, false);
        Rat den = 1;
        for (const auto& g : term.denominator) {
            den *= 1 - monomial(t, g);
        }
        total += num / den;
    }
    return total;
}

Rat polytope_poly_eval(const Polytope& p, std::span<const Rat> t) {
    return monomial_sum(t, p.lattice_points(), false);
}

Rat interior_neg_poly_eval(const Polytope& p, std::span<const Rat> t) {
    return monomial_sum(t, p.interior_lattice_points(), true);
}

TruncatedSeries expand_truncated(const SigmaRep& s, const Box& box) {
    const std::size_t n = box.dim();
    TruncatedSeries out(box);
    for (const auto& term : s.terms) {
        if (term.denominator.empty()) {
            for (const auto& pt : term.numerator) {
                if (box.contains(pt)) {
                    out.add(pt, 1);
                }
            }
            continue;
        }
        if (term.denominator.size() != n) {
            throw UsageError("expand_truncated: term is not full-dimensional");
        }
        // a = p + G k with k >= 0 integral  <=>  adj a - adj p lies in
        // D * Z_{>=0}^n, where adj = D G^{-1} is integral and D = |det G|.
        const RatMatrix g = transpose(rows_of(term.denominator));
        const auto inv = inverse(g);
        if (!inv) {
            throw UsageError("expand_truncated: dependent denominator generators");
        }
        const Int d = abs(det(g).get_num());
        std::vector<IntVector> adj(n, IntVector(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                adj[r][c] = Rat((*inv)[r][c] * d).get_num();
            }
        }
        auto apply = [&](const IntVector& v) {
            IntVector y(n);
            for (std::size_t r = 0; r < n; ++r) {
                y[r] = dot(adj[r], v);
            }
            return y;
        };
        auto residue = [&](const IntVector& y) {
            IntVector res(n);
            for (std::size_t r = 0; r < n; ++r) {
                res[r] = mod_floor(y[r], d);
            }
            return res;
        };
        std::map<IntVector, std::vector<IntVector>, LexLess> by_residue;
        for (const auto& pt : term.numerator) {
            auto y = apply(pt);
            by_residue[residue(y)].push_back(std::move(y));
        }
        box.for_each([&](const IntVector& a) {
            const auto y = apply(a);
            const auto it = by_residue.find(residue(y));
            if (it == by_residue.end()) {
                return;
            }
            long count = 0;
            for (const auto& q : it->second) {
                bool nonneg = true;
                for (std::size_t r = 0; r < n && nonneg; ++r) {
                    nonneg = y[r] >= q[r];
                }
                count += nonneg ? 1 : 0;
            }
            if (count != 0) {
                out.add(a, count);
            }
        });
    }
    return out;
}

std::string_view to_string(BrionVariant v) {
    switch (v) {
    case BrionVariant::P:
        return "P";
    case BrionVariant::one:
        return "one";
    case BrionVariant::intP:
        return "intP";
    }
    return "P";
}

BrionVariant parse_brion_variant(std::string_view text) {
    if (text == "P") {
        return BrionVariant::P;
    }
    if (text == "one") {
        return BrionVariant::one;
    }
    if (text == "intP") {
        return BrionVariant::intP;
    }
    throw UsageError("unknown variant '" + std::string(text) + "' (expected P, one or intP)");
}

ShiftMode mode_for(BrionVariant v) {
    switch (v) {
    case BrionVariant::P:
        return ShiftMode::shifted_by_v;
    case BrionVariant::one:
        return ShiftMode::unshifted;
    case BrionVariant::intP:
        return ShiftMode::shifted_by_neg_v;
    }
    return ShiftMode::unshifted;
}

RatVector draw_eval_point(Rng& rng, std::size_t dim) {
    RatVector t;
    for (std::size_t i = 0; i < dim; ++i) {
        const long num = 2 * rng.uniform(1, 48) + 1;
        const long den = 2 * rng.uniform(1, 48) + 1;
        Rat x(num, den);
        x.canonicalize();
        t.push_back(x);
    }
    return t;
}

BrionReport check_brion(const Polytope& p, BrionVariant variant, int trials, std::uint64_t seed) {
    const ShiftMode mode = mode_for(variant);
    std::vector<SigmaRep> reps;
    SigmaRep all;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        reps.push_back(sigma_vertex_cone(p, p.vertex_face(v), mode, seed + v));
        for (const auto& term : reps.back().terms) {
            all.terms.push_back({{}, term.denominator});
        }
    }

    BrionReport report{variant, trials, seed, true, {}};
    Rng rng(seed);
    constexpr int max_redraws = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        RatVector t;
        int redraws = 0;
        do {
            if (redraws++ == max_redraws) {
                throw GeometryError("could not draw an admissible evaluation point");
            }
            t = draw_eval_point(rng, p.dim());
        } while (!admissible(all, t));

        Rat lhs = 0;
        for (const auto& rep : reps) {
            lhs += eval_sigma(rep, t);
        }
        Rat rhs;
        switch (variant) {
        case BrionVariant::P:
            rhs = polytope_poly_eval(p, t);
            break;
        case BrionVariant::one:
            rhs = 1;
            break;
        case BrionVariant::intP:
            rhs = interior_neg_poly_eval(p, t);
            if (p.dim() % 2 == 1) {
                rhs = -rhs;
            }
            break;
        }
        if (lhs != rhs) {
            report.failures.push_back({t, lhs, rhs});
        }
    }
    report.ok = report.failures.empty();
    return report;
}

} // namespace brion
