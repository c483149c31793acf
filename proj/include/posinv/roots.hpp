#pragma once

/**
 * @file roots.hpp
 * @brief Certified isolation of the complex roots of a square-free rational polynomial.
 *
 * Approximate roots come from Aberth iteration in long double. Each is then
 * polished by exact-rational Newton steps and enclosed in a disk of radius
 * deg(p) * |p(z)| / |p'(z)|, which always contains a root. When the disks are
 * pairwise disjoint, each contains exactly one root.
 */

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "posinv/interval.hpp"
#include "posinv/rational.hpp"

namespace posinv {

struct ComplexRat {
  Rat re;
  Rat im;
};

/// Closed disk {z : |z - center| <= radius}.
struct Disk {
  ComplexRat center;
  Rat radius;

  ComplexBox box() const;
  bool contains(const ComplexBox& b) const;
  std::complex<long double> approx() const { return {center.re.get_d(), center.im.get_d()}; }
};

ComplexRat evaluate(const RatPoly& p, const ComplexRat& z);

class RootIsolation {
 public:
  /// Throws DomainError if p is not square-free or has degree < 1.
  explicit RootIsolation(RatPoly p);

  const RatPoly& poly() const { return p_; }
  std::size_t size() const { return disks_.size(); }
  const Disk& disk(std::size_t i) const { return disks_[i]; }

  /// Disk of radius <= 2^-bits around root i, contained in its isolating disk.
  Disk refine(std::size_t i, unsigned bits) const;
  /// Index of the root closest to an approximate location.
  std::size_t nearest(std::complex<long double> z) const;
  /// Index of the unique isolating disk containing the box, if any.
  std::optional<std::size_t> locate(const ComplexBox& b) const;
  bool is_real(std::size_t i) const;

 private:
  RatPoly p_;
  std::vector<Disk> disks_;
};

/// Unverified long double roots (Aberth); used as starting points.
std::vector<std::complex<long double>> approximate_roots(const RatPoly& p);

}  // namespace posinv
