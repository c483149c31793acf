#pragma once

/**
 * @file number_field.hpp
 * @brief Exact arithmetic in L = Q[x]/(m).
 *
 * Elements are canonical residues of degree < N = deg m, so equality is
 * coefficientwise. All values are immutable once built and may be shared
 * freely between threads.
 */

#include <memory>
#include <string>
#include <vector>

#include "posinv/rational.hpp"

namespace posinv {

class NFElem;
class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Validates that m is monic of degree >= 1 and, unless disabled,
  /// irreducible over Q. Throws InputError otherwise.
  static FieldPtr create(const RatPoly& min_poly, bool check_irreducible = true);

  std::size_t degree() const { return n_; }
  const RatPoly& min_poly() const { return m_; }

  NFElem zero() const;
  NFElem one() const;
  NFElem generator() const;
  NFElem rational(const Rat& q) const;
  /// Reduces an arbitrary-length coefficient vector modulo m.
  NFElem element(std::vector<Rat> coeffs) const;
  /// x^i as an element.
  NFElem basis(std::size_t i) const;

  /// In-place reduction of a coefficient vector (any length) to length N.
  void reduce(std::vector<Rat>& coeffs) const;

  bool same_as(const NumberField& other) const { return this == &other || m_ == other.m_; }

 private:
  explicit NumberField(RatPoly m);
  FieldPtr self() const { return shared_from_this(); }

  RatPoly m_;
  std::size_t n_;
  // Coordinates of x^(N+j), j = 0..N-2.
  std::vector<std::vector<Rat>> high_powers_;
};

class NFElem {
 public:
  NFElem(FieldPtr field, std::vector<Rat> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when every coefficient beyond the constant term vanishes.
  bool is_rational() const;

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& b);
  NFElem& operator-=(const NFElem& b);
  NFElem& operator*=(const NFElem& b);

  /// Inverse by extended gcd against m; DivisionByZero on zero.
  NFElem inverse() const;
  NFElem pow(unsigned e) const;

  /// The polynomial of this element evaluated at another element of the same field.
  NFElem substitute(const NFElem& x_image) const;

  RatPoly as_poly() const { return RatPoly(coeffs_); }
  std::vector<std::string> to_literal() const;
  std::string to_string(char var = 'x') const;

  friend bool operator==(const NFElem& a, const NFElem& b);

 private:
  FieldPtr field_;
  std::vector<Rat> coeffs_;
};

NFElem operator+(NFElem a, const NFElem& b);
NFElem operator-(NFElem a, const NFElem& b);
NFElem operator*(const NFElem& a, const NFElem& b);
NFElem operator*(const Rat& c, const NFElem& a);
NFElem operator/(const NFElem& a, const NFElem& b);

inline NFElem nf_add(const NFElem& a, const NFElem& b) { return a + b; }
inline NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }
inline NFElem nf_inv(const NFElem& a) { return a.inverse(); }

/// Throws StructuralError when a and b live in different fields.
void require_same_field(const NFElem& a, const NFElem& b);

/// Parses an array of rational strings (constant term first).
NFElem parse_element(const FieldPtr& field, const std::vector<std::string>& literal);

}  // namespace posinv
