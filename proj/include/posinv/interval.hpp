#pragma once

/**
 * @file interval.hpp
 * @brief Outward-rounded rational intervals and complex boxes.
 *
 * Endpoints are rationals snapped outward to the dyadic grid 2^-bits after
 * every inexact step, which keeps their size bounded while preserving the
 * enclosure property.
 */

#include <string>

#include "posinv/rational.hpp"

namespace posinv {

struct RealInterval {
  Rat lo;
  Rat hi;

  RealInterval() = default;
  RealInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  static RealInterval point(const Rat& q) { return {q, q}; }

  bool contains(const Rat& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool overlaps(const RealInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  /// Largest absolute value in the interval.
  Rat mag() const;
  /// Smallest absolute value in the interval.
  Rat mig() const;

  RealInterval round_out(unsigned bits) const;
  /// Enclosure of 1/x; DomainError when the interval contains 0.
  RealInterval reciprocal(unsigned bits) const;
  /// Enclosure of x^2 (tight, non-negative).
  RealInterval square() const;

  double to_double() const;
};

RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a);
RealInterval operator*(const RealInterval& a, const RealInterval& b);

struct ComplexBox {
  RealInterval re;
  RealInterval im;

  static ComplexBox point(const Rat& re, const Rat& im = 0) {
    return {RealInterval::point(re), RealInterval::point(im)};
  }

  ComplexBox conj() const { return {re, -im}; }
  bool overlaps(const ComplexBox& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  /// max of the real and imaginary widths.
  Rat width() const;
  ComplexBox round_out(unsigned bits) const { return {re.round_out(bits), im.round_out(bits)}; }
  /// Enclosure of |z|^2.
  RealInterval norm_sq() const { return re.square() + im.square(); }
  /// Enclosure of 1/z; DomainError when the box contains 0.
  ComplexBox reciprocal(unsigned bits) const;

  std::string to_string(int digits = 17) const;
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);

/// Decimal rendering of a rational with a fixed number of significant digits.
std::string to_decimal(const Rat& q, int digits);

}  // namespace posinv
