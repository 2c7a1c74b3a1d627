#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dendric/error.hpp"

namespace dendric {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// A coordinate outgrew the configured bit bound.
class FieldOverflowError : public Error {
 public:
  using Error::Error;
};

/// Number of square roots in the basis: the first d primes. Read once from
/// DENDRITIC_SURD_BASIS (1..64), default 8.
std::size_t surd_basis_size();

/// The i-th prime, 0-based (2, 3, 5, ...). i < 64.
unsigned surd_prime(std::size_t i);

/// Exact element c_0 + Σ c_i √p_i of the Q-span of 1 and the square roots of
/// the basis primes. Closed under addition and rational scaling only.
class ExactReal {
 public:
  static constexpr unsigned kMaxBits = 1u << 14;

  ExactReal() = default;
  ExactReal(const Rational& r);  // NOLINT: rationals embed implicitly
  ExactReal(long n) : ExactReal(Rational(n)) {}  // NOLINT

  /// coeff * √p_i. Throws PreconditionError when i >= surd_basis_size().
  static ExactReal surd(std::size_t i, const Rational& coeff = 1);

  /// Terms like `1/4`, `1/8r2`, `-r3`, `2`, joined by `+` or `-`; `rN`
  /// is √N for a basis prime N. Throws ParseError.
  static ExactReal parse(std::string_view text);

  /// Coordinate 0 is the rational part, coordinate i >= 1 multiplies
  /// √p_{i-1}. Missing coordinates are zero.
  Rational coord(std::size_t i) const;
  /// One past the last nonzero coordinate.
  std::size_t dimension() const { return coords_.size(); }

  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const { return coords_.size() <= 1; }
  /// -1, 0 or 1; exact.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o);
  ExactReal& operator*=(const Rational& r);
  ExactReal& operator/=(const Rational& r);

  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const Rational& r) { return a *= r; }
  friend ExactReal operator*(const Rational& r, ExactReal a) { return a *= r; }
  friend ExactReal operator/(ExactReal a, const Rational& r) { return a /= r; }

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const ExactReal& a,
                                          const ExactReal& b);

 private:
  void normalize();

  std::vector<Rational> coords_;
};

std::strong_ordering exact_cmp(const ExactReal& x, const ExactReal& y);

/// Rank over Q of the coordinate vectors.
std::size_t rational_rank(std::span<const ExactReal> values);

}  // namespace dendric
