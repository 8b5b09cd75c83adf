#pragma once

// Exact rational arithmetic substrate: scalars, vectors, matrices and the
// handful of linear-algebra routines the geometry modules need.

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brion {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

/// Raised on contract violations by the caller (dimension mismatch, zero
/// vector where a direction is required, ...).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when input data is well-formed but geometrically unusable.
class GeometryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Scalars

/// num/den in canonical form. Throws UsageError for den = 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p/q", "p" or "-p/q". Throws UsageError on malformed text or q = 0.
Rat parse_rat(std::string_view text);

/// Reduced "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

// ---------------------------------------------------------------------------
// Vectors

RatVector to_rat(std::span<const Int> v);
/// Throws UsageError if some coordinate is not integral.
IntVector to_int(std::span<const Rat> v);
bool is_integral(std::span<const Rat> v);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
Rat dot(std::span<const Int> a, std::span<const Rat> b);
Int dot(std::span<const Int> a, std::span<const Int> b);

RatVector add(std::span<const Rat> a, std::span<const Rat> b);
RatVector sub(std::span<const Rat> a, std::span<const Rat> b);
RatVector scale(std::span<const Rat> a, const Rat& s);
RatVector negate(std::span<const Rat> a);
IntVector negate(std::span<const Int> a);

bool is_zero(std::span<const Rat> v);
bool is_zero(std::span<const Int> v);

/// Divides v by the gcd of its entries; direction and sign are kept.
IntVector primitive(std::span<const Int> v);

/// Clears denominators of a rational vector and makes the result primitive.
IntVector primitive_direction(std::span<const Rat> v);

std::string to_string(std::span<const Rat> v);
std::string to_string(std::span<const Int> v);

// ---------------------------------------------------------------------------
// Matrices

RatMatrix identity(std::size_t n);
RatMatrix transpose(const RatMatrix& a);
RatVector mat_vec(const RatMatrix& a, std::span<const Rat> x);

/// Row rank over Q.
std::size_t rank(const RatMatrix& a);

Rat det(const RatMatrix& a);

/// Solves A x = b. Absent if inconsistent; for underdetermined systems the
/// free variables are set to zero. `columns` is needed when A has no rows.
std::optional<RatVector> solve_linear(const RatMatrix& a, std::span<const Rat> b,
                                      std::optional<std::size_t> columns = std::nullopt);

/// Basis of {x : A x = 0}; one vector per free column of the reduced form.
std::vector<RatVector> kernel_basis(const RatMatrix& a, std::size_t columns);

/// Exact inverse of a square matrix, absent if singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Matrix whose rows are the given integer vectors.
RatMatrix rows_of(const std::vector<IntVector>& rows);
RatMatrix rows_of(const std::vector<RatVector>& rows);

/// Visits every k-subset of {0, ..., m-1} in lexicographic order.
void for_each_combination(std::size_t m, std::size_t k,
                          const std::function<void(std::span<const std::size_t>)>& visit);

} // namespace brion
