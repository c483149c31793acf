#include "posinv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "posinv/errors.hpp"

namespace posinv {

namespace {

using cld = std::complex<long double>;

ComplexRat cmul(const ComplexRat& a, const ComplexRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexRat cdiv(const ComplexRat& a, const ComplexRat& b) {
  Rat den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Rat norm_sq(const ComplexRat& z) { return z.re * z.re + z.im * z.im; }

ComplexRat truncate(const ComplexRat& z, unsigned bits) {
  return {floor_dyadic(z.re, bits), floor_dyadic(z.im, bits)};
}

ComplexRat newton_step(const RatPoly& p, const RatPoly& dp, const ComplexRat& z, unsigned bits) {
  ComplexRat fz = evaluate(p, z);
  ComplexRat dz = evaluate(dp, z);
  if (dz.re == 0 && dz.im == 0) return z;
  ComplexRat step = cdiv(fz, dz);
  return truncate({z.re - step.re, z.im - step.im}, bits);
}

/// Radius deg(p)*|p(z)|/|p'(z)|; nullopt when p'(z) = 0.
std::optional<Rat> inclusion_radius(const RatPoly& p, const RatPoly& dp, const ComplexRat& z, unsigned bits) {
  Rat d2 = norm_sq(evaluate(dp, z));
  if (d2 == 0) return std::nullopt;
  Rat n = p.degree();
  Rat r2 = n * n * norm_sq(evaluate(p, z)) / d2;
  return sqrt_upper(r2, bits + 8);
}

ComplexRat from_approx(cld z, bool real) {
  Rat re(static_cast<double>(z.real()));
  Rat im = real ? Rat(0) : Rat(static_cast<double>(z.imag()));
  return {re, im};
}

}  // namespace

ComplexRat evaluate(const RatPoly& p, const ComplexRat& z) {
  ComplexRat acc{0, 0};
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc = cmul(acc, z);
    acc.re += cs[k];
  }
  return acc;
}

ComplexBox Disk::box() const {
  return {{center.re - radius, center.re + radius}, {center.im - radius, center.im + radius}};
}

bool Disk::contains(const ComplexBox& b) const {
  Rat r2 = radius * radius;
  for (const Rat* x : {&b.re.lo, &b.re.hi}) {
    for (const Rat* y : {&b.im.lo, &b.im.hi}) {
      Rat dx = *x - center.re, dy = *y - center.im;
      if (dx * dx + dy * dy > r2) return false;
    }
  }
  return true;
}

std::vector<cld> approximate_roots(const RatPoly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<cld> a(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = static_cast<long double>(Rat(p.coeff(i) / p.leading()).get_d());
  auto eval = [&](cld z, cld& deriv) {
    cld v = 0;
    deriv = 0;
    for (int i = n; i >= 0; --i) {
      deriv = deriv * z + v;
      v = v * z + a[static_cast<std::size_t>(i)];
    }
    return v;
  };
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(i)]));
  bound += 1;
  std::vector<cld> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(0.5L * bound, ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      cld d;
      cld v = eval(z[k], d);
      if (v == cld(0)) continue;
      cld w = v / d;
      cld s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      cld corr = w / (1.0L - w * s);
      z[k] -= corr;
      worst = std::max(worst, std::abs(corr) / (1 + std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

RootIsolation::RootIsolation(RatPoly p) : p_(std::move(p)) {
  if (p_.degree() < 1) throw DomainError("root isolation needs a polynomial of degree >= 1");
  RatPoly dp = p_.derivative();
  if (gcd(p_, dp).degree() > 0) throw DomainError("root isolation needs a square-free polynomial");

  // Keep real roots on the axis and one representative per conjugate pair,
  // so the final disks are conjugation-symmetric by construction.
  std::vector<ComplexRat> reps;
  std::vector<bool> real;
  for (const cld& z : approximate_roots(p_)) {
    long double tol = 1e-12L * (1 + std::abs(z));
    if (std::abs(z.imag()) <= tol) {
      reps.push_back(from_approx(z, true));
      real.push_back(true);
    } else if (z.imag() > 0) {
      reps.push_back(from_approx(z, false));
      real.push_back(false);
    }
  }
  std::size_t count = 0;
  for (bool r : real) count += r ? 1 : 2;
  if (count != static_cast<std::size_t>(p_.degree())) {
    throw InternalConsistencyError("root approximation lost conjugate symmetry for " + p_.to_string());
  }

  for (unsigned bits = 64; bits <= 8192; bits *= 2) {
    std::vector<Disk> disks;
    bool ok = true;
    for (std::size_t i = 0; i < reps.size() && ok; ++i) {
      for (int s = 0; s < 4; ++s) reps[i] = newton_step(p_, dp, reps[i], bits);
      auto r = inclusion_radius(p_, dp, reps[i], bits);
      if (!r) {
        ok = false;
        break;
      }
      disks.push_back({reps[i], *r});
      if (!real[i]) disks.push_back({{reps[i].re, -reps[i].im}, *r});
    }
    for (std::size_t i = 0; ok && i < disks.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < disks.size(); ++j) {
        ComplexRat diff{disks[i].center.re - disks[j].center.re, disks[i].center.im - disks[j].center.im};
        Rat rs = disks[i].radius + disks[j].radius;
        if (norm_sq(diff) <= rs * rs) ok = false;
      }
    }
    if (ok) {
      disks_ = std::move(disks);
      return;
    }
  }
  throw PrecisionExhausted("could not isolate the roots of " + p_.to_string());
}

Disk RootIsolation::refine(std::size_t i, unsigned bits) const {
  const Disk& iso = disks_.at(i);
  Rat target = Rat(1) / Rat(Integer(1) << bits);
  if (iso.radius <= target) return iso;
  RatPoly dp = p_.derivative();
  // Work on the upper half plane and mirror, which keeps real roots exactly real.
  bool mirrored = iso.center.im < 0;
  ComplexRat z = iso.center;
  if (mirrored) z.im = -z.im;
  for (unsigned work = bits + 16;; work += 16) {
    for (int s = 0; s < 64; ++s) {
      z = newton_step(p_, dp, z, work);
      auto r = inclusion_radius(p_, dp, z, work);
      if (!r) break;
      ComplexRat w = mirrored ? ComplexRat{z.re, -z.im} : z;
      ComplexRat diff{w.re - iso.center.re, w.im - iso.center.im};
      Rat slack = iso.radius - *r;
      if (*r <= target && slack > 0 && norm_sq(diff) <= slack * slack) return {w, *r};
    }
    if (work > bits + 4096) break;
  }
  throw PrecisionExhausted("root refinement did not converge for " + p_.to_string());
}

std::size_t RootIsolation::nearest(std::complex<long double> z) const {
  std::size_t best = 0;
  long double best_d = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < disks_.size(); ++i) {
    long double d = std::abs(disks_[i].approx() - z);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::optional<std::size_t> RootIsolation::locate(const ComplexBox& b) const {
  for (std::size_t i = 0; i < disks_.size(); ++i)
    if (disks_[i].contains(b)) return i;
  return std::nullopt;
}

bool RootIsolation::is_real(std::size_t i) const { return disks_.at(i).center.im == 0; }

}  // namespace posinv
