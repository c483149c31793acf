#include "posinv/crossed_product.hpp"

#include <algorithm>
#include <cctype>

#include "posinv/errors.hpp"

namespace posinv {

namespace {

std::string trim(std::string s) {
  auto sp = [](unsigned char ch) { return std::isspace(ch); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
  return s;
}

std::optional<std::size_t> position_of_product(const Tower& t, std::size_t s, std::size_t r) {
  auto a = t.try_compose(t.group()[s], t.group()[r]);
  if (!a) return std::nullopt;
  return t.group_position(*a);
}

}  // namespace

CocycleTable cocycle_from_entries(const Tower& t, const std::vector<std::pair<std::string, NFElem>>& entries) {
  const std::size_t n = t.n();
  CocycleTable c(n, t.field()->zero());
  std::vector<bool> seen(n * n, false);
  for (const auto& [key, value] : entries) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("cocycle key '" + key + "' is not of the form \"s,r\"");
    const std::string a = trim(key.substr(0, comma));
    const std::string b = trim(key.substr(comma + 1));
    auto ia = t.find(a);
    auto ib = t.find(b);
    if (!ia || !ib) throw InputError("cocycle key '" + key + "' names an undefined automorphism");
    auto pa = t.group_position(*ia);
    auto pb = t.group_position(*ib);
    if (!pa || !pb) throw InputError("cocycle key '" + key + "' names an automorphism outside G");
    if (seen[*pa * n + *pb]) throw InputError("cocycle key '" + key + "' given twice");
    seen[*pa * n + *pb] = true;
    c(*pa, *pb) = value;
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r)
      if (!seen[s * n + r])
        throw InputError("cocycle entry for (" + t.at(t.group()[s]).name + "," + t.at(t.group()[r]).name + ") missing");
  return c;
}

CocycleTable trivial_cocycle(const Tower& t) { return CocycleTable(t.n(), t.field()->one()); }

Report cocycle_validate(const Tower& t, const CocycleTable& c) {
  Report rep;
  const std::size_t n = t.n();
  auto name = [&](std::size_t s) { return t.at(t.group()[s]).name; };
  {
    Stopwatch sw;
    CheckResult r("cocycle_nonzero");
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t q = 0; q < n; ++q)
        if (c(s, q).is_zero()) r.fail({{"s", name(s)}, {"r", name(q)}});
    r.seconds = sw.seconds();
    rep.add(std::move(r));
  }
  {
    Stopwatch sw;
    CheckResult r("cocycle_identity");
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t h = 0; h < n; ++h) {
          auto sq = position_of_product(t, s, q);
          auto qh = position_of_product(t, q, h);
          if (!sq || !qh) {
            r.fail({{"reason", "G not closed"}, {"s", name(s)}, {"r", name(q)}, {"h", name(h)}});
            continue;
          }
          NFElem lhs = apply(t.at(t.group()[s]), c(q, h)) * c(s, *qh);
          NFElem rhs = c(s, q) * c(*sq, h);
          if (lhs != rhs)
            r.fail({{"s", name(s)}, {"r", name(q)}, {"h", name(h)}, {"lhs", lhs.to_literal()}, {"rhs", rhs.to_literal()}});
        }
    r.details["triples"] = n * n * n;
    r.seconds = sw.seconds();
    rep.add(std::move(r));
  }
  {
    Stopwatch sw;
    CheckResult r("cocycle_normalized");
    bool normalized = true;
    for (std::size_t s = 0; s < n; ++s)
      if (c(0, s) != c(0, 0) || c(s, 0) != c(0, 0)) normalized = false;
    r.details["normalized"] = normalized;
    if (!normalized) r.notes.push_back("not normalized; rescaled internally by e'_s = xi(id,id)^-1 e_s");
    r.seconds = sw.seconds();
    rep.add(std::move(r));
  }
  return rep;
}

bool cocycle_unitary(const Tower& t, const CocycleTable& c) {
  for (std::size_t s = 0; s < c.n(); ++s)
    for (std::size_t r = 0; r < c.n(); ++r)
      if (!(apply(t.alpha(), c(s, r)) * c(s, r)).is_one()) return false;
  return true;
}

AlgElem::AlgElem(AlgebraPtr algebra, std::vector<NFElem> coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw StructuralError("algebra element without an algebra");
  if (coeffs_.size() != algebra_->n()) throw StructuralError("algebra element has the wrong number of coefficients");
  for (const auto& c : coeffs_) require_same_field(algebra_->field()->one(), c);
}

bool AlgElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const NFElem& c) { return c.is_zero(); });
}

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& b) {
  if (algebra_ != b.algebra_) throw StructuralError("operands belong to different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& b) {
  if (algebra_ != b.algebra_) throw StructuralError("operands belong to different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

std::string AlgElem::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[s].to_string() + ")*e_" + algebra_->sigma(s).name;
  }
  return out.empty() ? "0" : out;
}

Json AlgElem::to_json() const {
  Json j = Json::object();
  for (std::size_t s = 0; s < coeffs_.size(); ++s) j[algebra_->sigma(s).name] = coeffs_[s].to_literal();
  return j;
}

AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
AlgElem operator*(const AlgElem& a, const AlgElem& b) { return mul(a, b); }

AlgElem operator*(const NFElem& y, const AlgElem& a) {
  std::vector<NFElem> c = a.coeffs();
  for (auto& x : c) x = y * x;
  return AlgElem(a.algebra(), std::move(c));
}

AlgElem operator*(const Rat& q, const AlgElem& a) {
  std::vector<NFElem> c = a.coeffs();
  for (auto& x : c) x = q * x;
  return AlgElem(a.algebra(), std::move(c));
}

CrossedProduct::CrossedProduct(std::shared_ptr<const Tower> tower, CocycleTable cocycle, NFElem rescale)
    : tower_(std::move(tower)), cocycle_(std::move(cocycle)), rescale_(std::move(rescale)) {
  const std::size_t n = tower_->n();
  mult_.assign(n, std::vector<std::size_t>(n));
  inv_.assign(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r) {
      auto p = position_of_product(*tower_, s, r);
      if (!p) throw StructuralError("G is not closed under composition");
      mult_[s][r] = *p;
      if (*p == 0) inv_[s] = r;
    }
  for (std::size_t s = 0; s < n; ++s)
    if (inv_[s] == n) throw StructuralError("G lacks inverses");
}

AlgebraPtr CrossedProduct::create(std::shared_ptr<const Tower> tower, const CocycleTable& cocycle) {
  const Tower& t = *tower;
  if (t.n() == 0 || cocycle.n() != t.n()) throw StructuralError("cocycle size does not match G");
  if (!t.identity_index() || t.group().front() != *t.identity_index())
    throw StructuralError("G does not contain the identity");
  for (std::size_t s = 0; s < t.n(); ++s)
    for (std::size_t r = 0; r < t.n(); ++r)
      if (cocycle(s, r).is_zero()) throw StructuralError("cocycle has a zero entry");
  const NFElem c = cocycle(0, 0);
  CocycleTable norm = cocycle;
  for (std::size_t s = 0; s < t.n(); ++s) {
    NFElem sc_inv = apply(t.at(t.group()[s]), c).inverse();
    for (std::size_t r = 0; r < t.n(); ++r) norm(s, r) = cocycle(s, r) * sc_inv;
  }
  return AlgebraPtr(new CrossedProduct(std::move(tower), std::move(norm), c));
}

AlgElem CrossedProduct::zero() const { return AlgElem(self(), std::vector<NFElem>(n(), field()->zero())); }

AlgElem CrossedProduct::one() const { return scalar(field()->one()); }

AlgElem CrossedProduct::generator(std::size_t s) const { return monomial(field()->one(), s); }

AlgElem CrossedProduct::scalar(const NFElem& y) const { return monomial(y, 0); }

AlgElem CrossedProduct::monomial(const NFElem& y, std::size_t s) const {
  std::vector<NFElem> c(n(), field()->zero());
  c.at(s) = y;
  return AlgElem(self(), std::move(c));
}

AlgElem CrossedProduct::basis(std::size_t index) const {
  const std::size_t deg = field()->degree();
  return monomial(field()->basis(index % deg), index / deg);
}

std::vector<Rat> CrossedProduct::to_rational(const AlgElem& a) const {
  std::vector<Rat> v;
  v.reserve(dim_q());
  for (const auto& c : a.coeffs()) v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
  return v;
}

AlgElem CrossedProduct::from_rational(const std::vector<Rat>& v) const {
  const std::size_t deg = field()->degree();
  if (v.size() != dim_q()) throw StructuralError("rational vector has the wrong length");
  std::vector<NFElem> c;
  for (std::size_t s = 0; s < n(); ++s)
    c.push_back(field()->element(std::vector<Rat>(v.begin() + static_cast<long>(s * deg),
                                                  v.begin() + static_cast<long>((s + 1) * deg))));
  return AlgElem(self(), std::move(c));
}

AlgElem mul(const AlgElem& a, const AlgElem& b) {
  if (a.algebra() != b.algebra()) throw StructuralError("operands belong to different algebras");
  const CrossedProduct& B = *a.algebra();
  const std::size_t n = B.n();
  std::vector<NFElem> out(n, B.field()->zero());
  for (std::size_t r = 0; r < n; ++r) {
    if (b[r].is_zero()) continue;
    for (std::size_t s = 0; s < n; ++s) {
      if (a[s].is_zero()) continue;
      out[B.product(s, r)] += a[s] * apply(B.sigma(s), b[r]) * B.cocycle()(s, r);
    }
  }
  return AlgElem(a.algebra(), std::move(out));
}

Matrix<NFElem> regular_rep(const AlgElem& b) {
  const CrossedProduct& B = *b.algebra();
  const std::size_t n = B.n();
  Matrix<NFElem> m(n, n, B.field()->zero());
  for (std::size_t s = 0; s < n; ++s) {
    if (b[s].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t t = B.product(s, r);
      m(t, r) = apply(B.sigma(B.inverse_position(t)), b[s] * B.cocycle()(s, r));
    }
  }
  return m;
}

std::vector<NFElem> right_coordinates(const AlgElem& b) {
  const CrossedProduct& B = *b.algebra();
  std::vector<NFElem> c;
  for (std::size_t r = 0; r < B.n(); ++r) c.push_back(apply(B.sigma(B.inverse_position(r)), b[r]));
  return c;
}

NFElem reduced_trace(const AlgElem& b) {
  const CrossedProduct& B = *b.algebra();
  NFElem tr = B.field()->zero();
  for (std::size_t r = 0; r < B.n(); ++r) tr += apply(B.sigma(B.inverse_position(r)), b[0] * B.cocycle()(0, r));
  for (std::size_t s = 0; s < B.n(); ++s)
    if (apply(B.sigma(s), tr) != tr)
      throw InternalConsistencyError("reduced trace " + tr.to_string() + " is not in k");
  return tr;
}

bool is_invertible(const AlgElem& b) { return !determinant(regular_rep(b)).is_zero(); }

AlgElem inverse(const AlgElem& b) {
  const CrossedProduct& B = *b.algebra();
  Matrix<NFElem> m = regular_rep(b);
  if (determinant(m).is_zero()) throw NotInvertible("element " + b.to_string() + " is not invertible");
  std::vector<NFElem> e(B.n(), B.field()->zero());
  e[0] = B.field()->one();
  auto c = solve(m, e);
  if (!c) throw InternalConsistencyError("regular representation is nonsingular but the system has no solution");
  std::vector<NFElem> x;
  for (std::size_t r = 0; r < B.n(); ++r) x.push_back(apply(B.sigma(r), (*c)[r]));
  return AlgElem(b.algebra(), std::move(x));
}

}  // namespace posinv
