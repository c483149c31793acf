#include "posinv/involution.hpp"

#include <map>

#include "posinv/errors.hpp"

namespace posinv {

Involution::Involution(AlgebraPtr algebra, std::vector<AlgElem> gen_images)
    : algebra_(std::move(algebra)), gen_images_(std::move(gen_images)) {
  if (gen_images_.size() != algebra_->n()) throw StructuralError("involution needs one image per generator");
}

AlgElem Involution::operator()(const AlgElem& a) const {
  if (a.algebra() != algebra_) throw StructuralError("element belongs to a different algebra");
  AlgElem out = algebra_->zero();
  for (std::size_t s = 0; s < algebra_->n(); ++s) {
    if (a[s].is_zero()) continue;
    out += gen_images_[s] * algebra_->scalar(apply(alpha(), a[s]));
  }
  return out;
}

Matrix<Rat> Involution::rational_matrix() const {
  const std::size_t dim = algebra_->dim_q();
  Matrix<Rat> m(dim, dim, Rat(0));
  for (std::size_t j = 0; j < dim; ++j) {
    auto col = algebra_->to_rational((*this)(algebra_->basis(j)));
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

Involution build_tau(const AlgebraPtr& algebra) {
  std::vector<AlgElem> images;
  for (std::size_t s = 0; s < algebra->n(); ++s) {
    try {
      images.push_back(inverse(algebra->generator(s)));
    } catch (const NotInvertible&) {
      throw StructuralError("generator e_" + algebra->sigma(s).name + " is not invertible");
    }
  }
  return Involution(algebra, std::move(images));
}

Report validate_involution(const Involution& tau) {
  const CrossedProduct& B = tau.algebra();
  const std::size_t dim = B.dim_q();
  const std::size_t max_witnesses = 4;
  Report rep;
  std::vector<AlgElem> basis, images;
  for (std::size_t i = 0; i < dim; ++i) {
    basis.push_back(B.basis(i));
    images.push_back(tau(basis.back()));
  }
  auto label = [&](std::size_t i) {
    return "x^" + std::to_string(i % B.field()->degree()) + " e_" + B.sigma(i / B.field()->degree()).name;
  };
  {
    Stopwatch sw;
    CheckResult c("anti_multiplicative");
    std::size_t failures = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        AlgElem lhs = tau(basis[i] * basis[j]);
        AlgElem rhs = images[j] * images[i];
        if (lhs == rhs) continue;
        if (failures++ < max_witnesses)
          c.fail({{"a", label(i)}, {"b", label(j)}, {"a_index", i}, {"b_index", j},
                  {"tau_ab", lhs.to_json()}, {"tau_b_tau_a", rhs.to_json()}});
      }
    c.details["pairs"] = dim * dim;
    c.details["failures"] = failures;
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("involutive");
    for (std::size_t i = 0; i < dim; ++i)
      if (tau(images[i]) != basis[i]) c.fail({{"a", label(i)}, {"a_index", i}, {"tau_tau_a", tau(images[i]).to_json()}});
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("negates_sqrt_minus_d");
    AlgElem s = B.scalar(B.tower().sqrt_md());
    if (tau(s) != -s) c.fail({{"tau_sqrt_minus_d", tau(s).to_json()}});
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("fixes_k0");
    for (const Rat& q : {Rat(1), Rat(-3), Rat(2, 7)}) {
      AlgElem a = B.scalar(B.field()->rational(q));
      if (tau(a) != a) c.fail({{"q", to_string(q)}, {"tau_q", tau(a).to_json()}});
    }
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  return rep;
}

namespace {

std::vector<AlgElem> eigen_basis(const Involution& tau, int sign) {
  const CrossedProduct& B = tau.algebra();
  Matrix<Rat> m = tau.rational_matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= sign;
  std::vector<AlgElem> out;
  for (const auto& v : kernel(m)) out.push_back(B.from_rational(v));
  const std::size_t n = B.n();
  if (out.size() != n * n)
    throw InternalConsistencyError(std::string(sign > 0 ? "Sym" : "Skew") + "(B, tau) has dimension " +
                                   std::to_string(out.size()) + ", expected " + std::to_string(n * n));
  return out;
}

}  // namespace

std::vector<AlgElem> symmetric_basis(const Involution& tau) { return eigen_basis(tau, 1); }

std::vector<AlgElem> skew_basis(const Involution& tau) { return eigen_basis(tau, -1); }

bool is_unitary_element(const Involution& tau, const AlgElem& u) { return (tau(u) * u) == tau.algebra().one(); }

AlgElem cayley(const Involution& tau, const AlgElem& s) {
  if (tau(s) != -s) throw DomainError("cayley: element is not skew under tau");
  const AlgElem one = tau.algebra().one();
  return (one - s) * inverse(one + s);
}

RatPoly cyclotomic(unsigned k) {
  static std::map<unsigned, RatPoly> cache;
  if (k == 0) throw DomainError("cyclotomic: order must be positive");
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  // x^k - 1 divided by Phi_d for the proper divisors d of k.
  std::vector<Rat> c(k + 1, Rat(0));
  c[0] = -1;
  c[k] = 1;
  RatPoly p(std::move(c));
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) p = divmod(p, cyclotomic(d)).first;
  cache.emplace(k, p);
  return p;
}

std::vector<AlgElem> torsion_unitaries(const Involution& tau) {
  const CrossedProduct& B = tau.algebra();
  const std::size_t n = B.field()->degree();
  std::vector<AlgElem> out;
  auto totient = [](unsigned k) {
    unsigned r = k;
    for (unsigned p = 2; p * p <= k; ++p) {
      if (k % p) continue;
      while (k % p == 0) k /= p;
      r -= r / p;
    }
    if (k > 1) r -= r / k;
    return r;
  };
  const unsigned bound = static_cast<unsigned>(2 * n * n + 2);
  for (unsigned k = 1; k <= bound; ++k) {
    const unsigned phi = totient(k);
    if (n % phi != 0) continue;
    for (const auto& [z, mult] : roots_in_field(B.field(), cyclotomic(k))) {
      (void)mult;
      if ((apply(tau.alpha(), z) * z).is_one()) out.push_back(B.scalar(z));
    }
  }
  return out;
}

}  // namespace posinv
