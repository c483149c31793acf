#include "posinv/interval.hpp"

#include <algorithm>
#include <cmath>

#include "posinv/errors.hpp"

namespace posinv {

Rat RealInterval::mag() const { return std::max(abs(lo), abs(hi)); }

Rat RealInterval::mig() const {
  if (contains_zero()) return 0;
  return std::min(abs(lo), abs(hi));
}

RealInterval RealInterval::round_out(unsigned bits) const { return {floor_dyadic(lo, bits), ceil_dyadic(hi, bits)}; }

RealInterval RealInterval::reciprocal(unsigned bits) const {
  if (contains_zero()) throw DomainError("reciprocal of an interval containing zero");
  return RealInterval{Rat(1) / hi, Rat(1) / lo}.round_out(bits);
}

RealInterval RealInterval::square() const {
  Rat a = lo * lo, b = hi * hi;
  if (contains_zero()) return {Rat(0), std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

double RealInterval::to_double() const { return mid().get_d(); }

RealInterval operator+(const RealInterval& a, const RealInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RealInterval operator-(const RealInterval& a, const RealInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
RealInterval operator-(const RealInterval& a) { return {-a.hi, -a.lo}; }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  if (a.lo == a.hi && b.lo == b.hi) return RealInterval::point(a.lo * b.lo);
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Rat ComplexBox::width() const { return std::max(re.width(), im.width()); }

ComplexBox ComplexBox::reciprocal(unsigned bits) const {
  if (contains_zero()) throw DomainError("reciprocal of a complex box containing zero");
  RealInterval inv_norm = norm_sq().round_out(bits + 8).reciprocal(bits + 8);
  return ComplexBox{re * inv_norm, -(im * inv_norm)}.round_out(bits);
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }
ComplexBox operator-(const ComplexBox& a) { return {-a.re, -a.im}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string to_decimal(const Rat& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rat scaled = abs(q) * scale + Rat(1, 2);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = q < 0 && n != 0;
  return negative ? "-" + s : s;
}

std::string ComplexBox::to_string(int digits) const {
  return "(" + to_decimal(re.mid(), digits) + ", " + to_decimal(im.mid(), digits) + ") +/- " +
         to_decimal(width() / 2, digits);
}

}  // namespace posinv
