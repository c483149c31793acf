#include "posinv/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "posinv/errors.hpp"

namespace posinv {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer mul_pow2(const Integer& z, unsigned bits) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), bits);
  return r;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den)) {
    throw InputError("malformed rational literal \"" + std::string(text) + "\"");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in rational literal \"" + std::string(text) + "\"");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat floor_dyadic(const Rat& q, unsigned bits) {
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), mul_pow2(q.get_num(), bits).get_mpz_t(), q.get_den().get_mpz_t());
  Rat r(scaled, mul_pow2(Integer(1), bits));
  r.canonicalize();
  return r;
}

Rat ceil_dyadic(const Rat& q, unsigned bits) {
  Integer scaled;
  mpz_cdiv_q(scaled.get_mpz_t(), mul_pow2(q.get_num(), bits).get_mpz_t(), q.get_den().get_mpz_t());
  Rat r(scaled, mul_pow2(Integer(1), bits));
  r.canonicalize();
  return r;
}

Rat sqrt_upper(const Rat& q, unsigned bits) {
  if (q < 0) throw DomainError("sqrt of a negative rational");
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), mul_pow2(q.get_num(), 2 * bits).get_mpz_t(), q.get_den().get_mpz_t());
  Integer s = isqrt(n);
  if (s * s != n) s += 1;
  Rat r(s, mul_pow2(Integer(1), bits));
  r.canonicalize();
  return r;
}

Rat sqrt_lower(const Rat& q, unsigned bits) {
  if (q < 0) throw DomainError("sqrt of a negative rational");
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), mul_pow2(q.get_num(), 2 * bits).get_mpz_t(), q.get_den().get_mpz_t());
  Rat r(isqrt(n), mul_pow2(Integer(1), bits));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> cs(degree + 1);
  cs[degree] = c;
  return RatPoly(std::move(cs));
}

RatPoly RatPoly::linear(const Rat& root) { return RatPoly({-root, Rat(1)}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  Rat lc = leading();
  std::vector<Rat> cs = coeffs_;
  for (auto& c : cs) c /= lc;
  return RatPoly(std::move(cs));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> cs = coeffs_;
  for (auto& c : cs) c = -c;
  return RatPoly(std::move(cs));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(cs));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(cs));
}

RatPoly operator*(const Rat& c, const RatPoly& a) {
  std::vector<Rat> cs = a.coeffs_;
  for (auto& x : cs) x *= c;
  return RatPoly(std::move(cs));
}

std::string RatPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << posinv::to_string(mag);
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(a.coeffs().size() - b.coeffs().size() + 1);
  const auto db = static_cast<std::size_t>(b.degree());
  const Rat& lc = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rat f = rem[k] / lc;
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Rat resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int m = a.degree(), n = b.degree();
  if (n == 0) {
    Rat r = 1;
    for (int i = 0; i < m; ++i) r *= b.leading();
    return r;
  }
  if (m == 0) {
    Rat r = 1;
    for (int i = 0; i < n; ++i) r *= a.leading();
    return r;
  }
  if (m < n) {
    Rat r = resultant(b, a);
    return (m * n) % 2 ? Rat(-r) : r;
  }
  RatPoly r = divmod(a, b).second;
  if (r.is_zero()) return 0;
  Rat factor = 1;
  for (int i = 0; i < m - r.degree(); ++i) factor *= b.leading();
  if ((m * n) % 2) factor = -factor;
  return factor * resultant(b, r);
}

Rat discriminant(const RatPoly& monic_poly) {
  int n = monic_poly.degree();
  Rat r = resultant(monic_poly, monic_poly.derivative());
  return ((n * (n - 1) / 2) % 2) ? Rat(-r) : r;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& a) {
  std::vector<std::pair<RatPoly, int>> out;
  if (a.degree() < 1) return out;
  RatPoly f = a.monic();
  RatPoly fp = f.derivative();
  RatPoly c = gcd(f, fp);
  RatPoly w = divmod(f, c).first;
  RatPoly y = divmod(fp, c).first;
  RatPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
  }
  return out;
}

Integer integral_scale(const RatPoly& monic_poly) {
  Integer c = 1;
  for (const auto& q : monic_poly.coeffs()) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), c.get_mpz_t(), q.get_den().get_mpz_t());
    c = g;
  }
  return c;
}

RatPoly scale_roots(const RatPoly& monic_poly, const Rat& c) {
  const auto& cs = monic_poly.coeffs();
  std::vector<Rat> out(cs.size());
  Rat power = 1;
  for (std::size_t k = cs.size(); k-- > 0;) {
    out[k] = cs[k] * power;
    power *= c;
  }
  return RatPoly(std::move(out));
}

}  // namespace posinv
