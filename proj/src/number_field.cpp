#include "posinv/number_field.hpp"

#include <sstream>

#include "posinv/errors.hpp"
#include "posinv/factor.hpp"

namespace posinv {

NumberField::NumberField(RatPoly m) : m_(std::move(m)), n_(static_cast<std::size_t>(m_.degree())) {
  // x^N = -(m_0 + ... + m_{N-1} x^{N-1}); higher powers by shifting.
  std::vector<Rat> cur(n_);
  for (std::size_t i = 0; i < n_; ++i) cur[i] = -m_.coeff(i);
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    high_powers_.push_back(cur);
    std::vector<Rat> next(n_);
    const Rat top = cur[n_ - 1];
    for (std::size_t i = n_ - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < n_; ++i) next[i] -= top * m_.coeff(i);
    cur = std::move(next);
  }
}

FieldPtr NumberField::create(const RatPoly& min_poly, bool check_irreducible) {
  if (min_poly.degree() < 1) throw InputError("minimal polynomial must have degree >= 1");
  if (!min_poly.is_monic()) throw InputError("minimal polynomial must be monic");
  if (check_irreducible && !is_irreducible(min_poly)) {
    throw InputError("minimal polynomial " + min_poly.to_string() + " is reducible over Q");
  }
  return FieldPtr(new NumberField(min_poly));
}

void NumberField::reduce(std::vector<Rat>& c) const {
  if (c.size() > n_) {
    for (std::size_t k = c.size(); k-- > n_;) {
      if (c[k] == 0) continue;
      if (k < 2 * n_ - 1) {
        const auto& row = high_powers_[k - n_];
        for (std::size_t i = 0; i < n_; ++i) c[i] += c[k] * row[i];
      } else {
        // Beyond the table: fold one degree at a time.
        for (std::size_t i = 0; i < n_; ++i) c[k - n_ + i] -= c[k] * m_.coeff(i);
      }
      c[k] = 0;
    }
  }
  c.resize(n_);
}

NFElem NumberField::zero() const { return NFElem(self(), std::vector<Rat>(n_)); }
NFElem NumberField::one() const { return rational(1); }

NFElem NumberField::generator() const {
  std::vector<Rat> c(std::max<std::size_t>(n_, 2));
  c[1] = 1;
  return element(std::move(c));
}

NFElem NumberField::rational(const Rat& q) const {
  std::vector<Rat> c(n_);
  c[0] = q;
  return NFElem(self(), std::move(c));
}

NFElem NumberField::element(std::vector<Rat> coeffs) const { return NFElem(self(), std::move(coeffs)); }

NFElem NumberField::basis(std::size_t i) const {
  std::vector<Rat> c(std::max(n_, i + 1));
  c[i] = 1;
  return element(std::move(c));
}

// ---------------------------------------------------------------------------

NFElem::NFElem(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw StructuralError("element without a field");
  field_->reduce(coeffs_);
}

void require_same_field(const NFElem& a, const NFElem& b) {
  if (!a.field()->same_as(*b.field())) throw StructuralError("operands belong to different number fields");
}

bool NFElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool NFElem::is_one() const { return is_rational() && coeffs_[0] == 1; }

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

NFElem& NFElem::operator+=(const NFElem& b) {
  require_same_field(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& b) {
  require_same_field(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& b) {
  *this = *this * b;
  return *this;
}

NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }

NFElem operator*(const NFElem& a, const NFElem& b) {
  require_same_field(a, b);
  const std::size_t n = a.coeffs().size();
  std::vector<Rat> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  return NFElem(a.field(), std::move(prod));
}

NFElem operator*(const Rat& c, const NFElem& a) {
  std::vector<Rat> cs = a.coeffs();
  for (auto& x : cs) x *= c;
  return NFElem(a.field(), std::move(cs));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

bool operator==(const NFElem& a, const NFElem& b) {
  return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  // Extended Euclid on (a, m): track s with s*a = r (mod m).
  RatPoly r0 = field_->min_poly(), r1 = as_poly();
  RatPoly s0, s1 = RatPoly::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw InternalConsistencyError("element shares a factor with the minimal polynomial");
  Rat c = r1.leading();
  std::vector<Rat> cs = s1.coeffs();
  for (auto& x : cs) x /= c;
  return NFElem(field_, std::move(cs));
}

NFElem NFElem::pow(unsigned e) const {
  NFElem result = field_->one();
  NFElem base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

NFElem NFElem::substitute(const NFElem& x_image) const {
  require_same_field(*this, x_image);
  NFElem acc = field_->zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= x_image;
    acc.coeffs_[0] += coeffs_[k];
  }
  return acc;
}

std::vector<std::string> NFElem::to_literal() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(posinv::to_string(c));
  return out;
}

std::string NFElem::to_string(char var) const { return as_poly().to_string(var); }

NFElem parse_element(const FieldPtr& field, const std::vector<std::string>& literal) {
  if (literal.size() > field->degree()) {
    throw InputError("element literal has " + std::to_string(literal.size()) + " coefficients, field degree is " +
                     std::to_string(field->degree()));
  }
  std::vector<Rat> cs;
  cs.reserve(literal.size());
  for (const auto& s : literal) cs.push_back(parse_rational(s));
  return field->element(std::move(cs));
}

}  // namespace posinv
