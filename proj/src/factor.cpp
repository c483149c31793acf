#include "posinv/factor.hpp"

#include <algorithm>
#include <optional>

#include "posinv/errors.hpp"
#include "posinv/interval.hpp"
#include "posinv/roots.hpp"

namespace posinv {

namespace {

enum class Verdict { kNotFactor, kCandidate, kUndecided };

/// Integer coefficients of prod (Y - r) if every enclosure pins down exactly one integer.
Verdict subset_product(const std::vector<ComplexBox>& roots, const std::vector<std::size_t>& subset, unsigned bits,
                       std::vector<Rat>& out) {
  std::vector<ComplexBox> poly{ComplexBox::point(1)};
  for (std::size_t idx : subset) {
    std::vector<ComplexBox> next(poly.size() + 1, ComplexBox::point(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = next[j + 1] + poly[j];
      next[j] = (next[j] - poly[j] * roots[idx]).round_out(bits);
    }
    poly = std::move(next);
  }
  out.clear();
  bool undecided = false;
  for (const auto& c : poly) {
    if (!c.im.contains_zero()) return Verdict::kNotFactor;
    Integer lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), c.re.lo.get_num().get_mpz_t(), c.re.lo.get_den().get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), c.re.hi.get_num().get_mpz_t(), c.re.hi.get_den().get_mpz_t());
    if (lo > hi) return Verdict::kNotFactor;
    if (lo != hi) undecided = true;
    out.emplace_back(lo);
  }
  return undecided ? Verdict::kUndecided : Verdict::kCandidate;
}

/// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<RatPoly> factor_squarefree(const RatPoly& f) {
  if (f.degree() <= 1) return {f};
  if (f.degree() > kMaxFactorDegree) {
    throw DomainError("factorization over Q is limited to degree " + std::to_string(kMaxFactorDegree));
  }
  const Integer scale = integral_scale(f);
  RatPoly rest = scale_roots(f, Rat(scale));
  const RootIsolation iso(rest);
  const std::size_t n = iso.size();

  // Conjugate partner of each root (disks are conjugation-symmetric).
  std::vector<std::size_t> partner(n);
  for (std::size_t i = 0; i < n; ++i) {
    partner[i] = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (iso.disk(j).center.re == iso.disk(i).center.re && iso.disk(j).center.im == -iso.disk(i).center.im) {
        partner[i] = j;
      }
    }
  }

  std::vector<RatPoly> factors;
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    std::vector<ComplexBox> boxes;
    for (std::size_t i = 0; i < n; ++i) boxes.push_back(iso.refine(i, bits).box());
    bool undecided = false;
    for (std::size_t k = 1; 2 * k <= remaining.size(); ++k) {
      std::vector<std::size_t> comb(k);
      for (std::size_t i = 0; i < k; ++i) comb[i] = i;
      bool restart = false;
      do {
        std::vector<std::size_t> subset;
        for (std::size_t c : comb) subset.push_back(remaining[c]);
        bool closed = std::all_of(subset.begin(), subset.end(), [&](std::size_t r) {
          return std::find(subset.begin(), subset.end(), partner[r]) != subset.end();
        });
        if (!closed) continue;
        std::vector<Rat> coeffs;
        Verdict v = subset_product(boxes, subset, bits + 16, coeffs);
        if (v == Verdict::kUndecided) undecided = true;
        if (v != Verdict::kCandidate) continue;
        RatPoly g(coeffs);
        auto [q, r] = divmod(rest, g);
        if (!r.is_zero()) continue;
        factors.push_back(scale_roots(g, Rat(1) / Rat(scale)));
        rest = q;
        std::vector<std::size_t> left;
        for (std::size_t idx : remaining)
          if (std::find(subset.begin(), subset.end(), idx) == subset.end()) left.push_back(idx);
        remaining = std::move(left);
        restart = true;
        break;
      } while (next_combination(comb, remaining.size()));
      if (restart) k = 0;  // rescan from singletons on the smaller root set
    }
    if (!undecided) {
      if (rest.degree() >= 1) factors.push_back(scale_roots(rest, Rat(1) / Rat(scale)));
      std::sort(factors.begin(), factors.end(),
                [](const RatPoly& a, const RatPoly& b) { return a.degree() < b.degree(); });
      return factors;
    }
  }
  throw PrecisionExhausted("factorization over Q did not converge for " + f.to_string());
}

}  // namespace

std::vector<std::pair<RatPoly, int>> factor_rational(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree(f)) out.emplace_back(std::move(g), mult);
  }
  return out;
}

bool is_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return false;
  auto fs = factor_rational(p);
  return fs.size() == 1 && fs.front().second == 1;
}

}  // namespace posinv
