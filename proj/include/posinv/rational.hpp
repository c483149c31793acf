#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals and dense univariate polynomials over Q.
 *
 * Rationals are GMP mpq values, always kept canonical (lowest terms,
 * positive denominator). Polynomials store coefficients constant term first
 * and never carry trailing zeros, so equality is coefficientwise.
 */

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posinv {

using Integer = mpz_class;
using Rat = mpq_class;

/// Parses "p/q" or "p" (base 10, optional leading minus). Throws InputError.
Rat parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rat& q);

/// Nearest lower/upper multiple of 2^-bits.
Rat floor_dyadic(const Rat& q, unsigned bits);
Rat ceil_dyadic(const Rat& q, unsigned bits);

/// Upper bound on sqrt(q) for q >= 0, accurate to about 2^-bits.
Rat sqrt_upper(const Rat& q, unsigned bits);
Rat sqrt_lower(const Rat& q, unsigned bits);

/// Dense polynomial over Q, coefficient i multiplies X^i.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, std::size_t degree);
  /// X - root
  static RatPoly linear(const Rat& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i, zero past the degree.
  Rat coeff(std::size_t i) const;
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& x) const;

  RatPoly derivative() const;
  RatPoly monic() const;
  RatPoly operator-() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& c, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'X') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Resultant via the Euclidean remainder sequence.
Rat resultant(const RatPoly& a, const RatPoly& b);
Rat discriminant(const RatPoly& monic_poly);
/// Square-free factorization a = lc * prod f_i^i (Yun); returns (f_i, i) with f_i monic, non-constant.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& a);

/// Smallest positive integer c such that c^deg * p(X/c) has integer coefficients (p monic).
Integer integral_scale(const RatPoly& monic_poly);
/// c^deg * p(X/c) for monic p.
RatPoly scale_roots(const RatPoly& monic_poly, const Rat& c);

}  // namespace posinv
