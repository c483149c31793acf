// Roots in L of rational polynomials.
//
// Let c scale m to a monic integer polynomial mc with root t = c x, and cf
// scale an irreducible factor f to fc. A root y of fc in L is an algebraic
// integer, so g = y * mc'(t) lies in Z[t] (Euler). Writing y_k for the image
// of y under t -> t_k, interpolation gives g = sum_k y_k * mc(X)/(X - t_k),
// where each y_k is a root of fc. Enumerating the admissible maps
// k -> root of fc and keeping those whose interpolant has integer
// coefficients yields candidates; each is confirmed by exact evaluation.

#include <algorithm>
#include <cmath>
#include <complex>

#include "posinv/errors.hpp"
#include "posinv/factor.hpp"
#include "posinv/galois.hpp"
#include "posinv/interval.hpp"
#include "posinv/roots.hpp"

namespace posinv {

namespace {

using cld = std::complex<long double>;

std::vector<std::size_t> partners(const RootIsolation& iso) {
  std::vector<std::size_t> p(iso.size());
  for (std::size_t i = 0; i < iso.size(); ++i) {
    p[i] = i;
    for (std::size_t j = 0; j < iso.size(); ++j)
      if (iso.disk(j).center.re == iso.disk(i).center.re && iso.disk(j).center.im == -iso.disk(i).center.im) p[i] = j;
  }
  return p;
}

// Coefficients of mc(X)/(X - t), constant first.
template <class C, class F>
std::vector<C> deflate(const RatPoly& mc, const C& t, F&& from_rat) {
  const std::size_t n = static_cast<std::size_t>(mc.degree());
  std::vector<C> q(n);
  q[n - 1] = from_rat(Rat(1));
  for (std::size_t i = n - 1; i > 0; --i) q[i - 1] = from_rat(mc.coeff(i)) + t * q[i];
  return q;
}

class RootSearch {
 public:
  RootSearch(const FieldPtr& field, const RatPoly& f)
      : field_(field),
        n_(field->degree()),
        e_(static_cast<std::size_t>(f.degree())),
        f_(f),
        c_(integral_scale(field->min_poly())),
        cf_(integral_scale(f)),
        mc_(scale_roots(field->min_poly(), Rat(c_))),
        fc_(scale_roots(f, Rat(cf_))),
        iso_m_(mc_),
        iso_f_(fc_),
        pm_(partners(iso_m_)),
        pf_(partners(iso_f_)) {
    for (std::size_t k = 0; k < n_; ++k) {
      cld t = iso_m_.disk(k).approx();
      q_.push_back(deflate(mc_, t, [](const Rat& r) { return cld(static_cast<long double>(r.get_d())); }));
    }
    for (std::size_t j = 0; j < e_; ++j) z_.push_back(iso_f_.disk(j).approx());
    long double zmax = 0;
    for (auto z : z_) zmax = std::max(zmax, std::abs(z));
    scale_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) scale_[i] += std::abs(q_[k][i]) * zmax;
    // mc'(t) and t = c x as elements of L.
    NFElem t = Rat(c_) * field_->generator();
    NFElem d = field_->zero();
    NFElem tp = field_->one();
    for (int i = 1; i <= mc_.degree(); ++i) {
      d += (Rat(i) * mc_.coeff(static_cast<std::size_t>(i))) * tp;
      tp *= t;
    }
    deriv_inv_ = d.inverse();
    t_ = t;
  }

  std::vector<NFElem> run() {
    assign_.assign(n_, 0);
    count_.assign(e_, 0);
    dfs(0);
    return found_;
  }

 private:
  void dfs(std::size_t k) {
    if (k == n_) {
      leaf();
      return;
    }
    const std::size_t cap = n_ / e_;
    auto try_root = [&](std::size_t j) {
      if (count_[j] >= cap) return;
      ++count_[j];
      assign_[k] = j;
      dfs(k + 1);
      --count_[j];
    };
    if (pm_[k] < k) {
      try_root(pf_[assign_[pm_[k]]]);
    } else if (pm_[k] == k) {
      for (std::size_t j = 0; j < e_; ++j)
        if (pf_[j] == j) try_root(j);
    } else {
      for (std::size_t j = 0; j < e_; ++j) try_root(j);
    }
  }

  void leaf() {
    for (std::size_t i = 0; i < n_; ++i) {
      cld g = 0;
      for (std::size_t k = 0; k < n_; ++k) g += q_[k][i] * z_[assign_[k]];
      const long double tol = 1e-9L * (1 + scale_[i]);
      if (std::fabs(g.imag()) > tol || std::fabs(g.real() - std::round(g.real())) > tol) return;
    }
    if (auto y = certify()) {
      if (std::find(found_.begin(), found_.end(), *y) == found_.end()) found_.push_back(*y);
    }
  }

  std::optional<NFElem> certify() const {
    for (unsigned bits = 128; bits <= 4096; bits *= 2) {
      std::vector<ComplexBox> zb;
      for (std::size_t j = 0; j < e_; ++j) zb.push_back(iso_f_.refine(j, bits).box());
      std::vector<ComplexBox> g(n_, ComplexBox::point(0));
      for (std::size_t k = 0; k < n_; ++k) {
        ComplexBox t = iso_m_.refine(k, bits).box();
        auto q = deflate(mc_, t, [](const Rat& r) { return ComplexBox::point(r); });
        for (std::size_t i = 0; i < n_; ++i) g[i] = (g[i] + (q[i] * zb[assign_[k]]).round_out(bits + 16));
      }
      std::vector<Rat> coeffs;
      bool undecided = false;
      for (const auto& c : g) {
        if (!c.im.contains_zero()) return std::nullopt;
        Integer lo, hi;
        mpz_cdiv_q(lo.get_mpz_t(), c.re.lo.get_num().get_mpz_t(), c.re.lo.get_den().get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), c.re.hi.get_num().get_mpz_t(), c.re.hi.get_den().get_mpz_t());
        if (lo > hi) return std::nullopt;
        if (lo != hi) undecided = true;
        coeffs.emplace_back(lo);
      }
      if (undecided) continue;
      NFElem gt = field_->zero();
      NFElem tp = field_->one();
      for (std::size_t i = 0; i < n_; ++i) {
        gt += coeffs[i] * tp;
        tp *= t_;
      }
      NFElem y = (gt * deriv_inv_) * field_->rational(Rat(1) / Rat(cf_));
      NFElem v = field_->zero();
      for (std::size_t k = f_.coeffs().size(); k-- > 0;) v = v * y + field_->rational(f_.coeffs()[k]);
      if (v.is_zero()) return y;
      return std::nullopt;
    }
    return std::nullopt;
  }

  FieldPtr field_;
  std::size_t n_, e_;
  RatPoly f_;
  Integer c_, cf_;
  RatPoly mc_, fc_;
  RootIsolation iso_m_, iso_f_;
  std::vector<std::size_t> pm_, pf_;
  std::vector<std::vector<cld>> q_;
  std::vector<cld> z_;
  std::vector<long double> scale_;
  NFElem deriv_inv_ = field_->zero();
  NFElem t_ = field_->zero();
  std::vector<std::size_t> assign_, count_;
  std::vector<NFElem> found_;
};

std::vector<NFElem> roots_of_irreducible(const FieldPtr& field, const RatPoly& f) {
  const std::size_t n = field->degree();
  const std::size_t e = static_cast<std::size_t>(f.degree());
  if (e == 1) return {field->rational(-f.coeff(0))};
  if (e == 0 || n % e != 0) return {};
  return RootSearch(field, f).run();
}

}  // namespace

std::vector<std::pair<NFElem, int>> roots_in_field(const FieldPtr& field, const RatPoly& p) {
  if (p.is_zero()) throw DomainError("roots_in_field: zero polynomial");
  std::vector<std::pair<NFElem, int>> out;
  for (const auto& [f, mult] : factor_rational(p))
    for (auto& r : roots_of_irreducible(field, f)) out.emplace_back(std::move(r), mult);
  return out;
}

}  // namespace posinv
