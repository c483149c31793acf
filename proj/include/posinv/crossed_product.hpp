#pragma once

/**
 * @file crossed_product.hpp
 * @brief The crossed product B = (xi, L/k, G).
 *
 * An element is sum_s x_s e_s with coefficients on the left, indexed by
 * position in Tower::group() (identity first). Multiplication:
 *   (x e_s)(y e_r) = x s(y) xi(s,r) e_{sr}.
 * The cocycle is normalized internally so that xi(id,id) = 1 and e_id = 1.
 */

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "posinv/galois.hpp"
#include "posinv/linalg.hpp"
#include "posinv/number_field.hpp"
#include "posinv/report.hpp"

namespace posinv {

/// xi as a |G| x |G| table indexed by group positions.
class CocycleTable {
 public:
  CocycleTable(std::size_t n, const NFElem& fill) : n_(n), entries_(n * n, fill) {}

  std::size_t n() const { return n_; }
  const NFElem& operator()(std::size_t s, std::size_t r) const { return entries_[s * n_ + r]; }
  NFElem& operator()(std::size_t s, std::size_t r) { return entries_[s * n_ + r]; }

  friend bool operator==(const CocycleTable& a, const CocycleTable& b) { return a.entries_ == b.entries_; }

 private:
  std::size_t n_;
  std::vector<NFElem> entries_;
};

/// From entries keyed "s,r" by automorphism names. InputError on unknown,
/// repeated or missing pairs.
CocycleTable cocycle_from_entries(const Tower& t, const std::vector<std::pair<std::string, NFElem>>& entries);
CocycleTable trivial_cocycle(const Tower& t);

/// Nonzero entries, normalization and the 2-cocycle identity over all triples.
Report cocycle_validate(const Tower& t, const CocycleTable& c);
/// alpha(xi(s,r)) * xi(s,r) == 1 for every pair.
bool cocycle_unitary(const Tower& t, const CocycleTable& c);

class CrossedProduct;
using AlgebraPtr = std::shared_ptr<const CrossedProduct>;

class AlgElem {
 public:
  AlgElem(AlgebraPtr algebra, std::vector<NFElem> coeffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  /// Left coefficient of e_s, s a group position.
  const NFElem& operator[](std::size_t s) const { return coeffs_[s]; }
  const std::vector<NFElem>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  AlgElem operator-() const;
  AlgElem& operator+=(const AlgElem& b);
  AlgElem& operator-=(const AlgElem& b);

  std::string to_string() const;
  Json to_json() const;

  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.coeffs_ == b.coeffs_; }

 private:
  AlgebraPtr algebra_;
  std::vector<NFElem> coeffs_;
};

AlgElem operator+(AlgElem a, const AlgElem& b);
AlgElem operator-(AlgElem a, const AlgElem& b);
AlgElem operator*(const AlgElem& a, const AlgElem& b);
/// y * a for y in L (left multiplication).
AlgElem operator*(const NFElem& y, const AlgElem& a);
AlgElem operator*(const Rat& q, const AlgElem& a);

class CrossedProduct : public std::enable_shared_from_this<CrossedProduct> {
 public:
  /// Rescales an unnormalized cocycle: e'_s = xi(id,id)^-1 e_s, so that
  /// xi'(s,r) = xi(s,r) / s(xi(id,id)). Throws StructuralError if any entry is zero.
  static AlgebraPtr create(std::shared_ptr<const Tower> tower, const CocycleTable& cocycle);

  const Tower& tower() const { return *tower_; }
  const std::shared_ptr<const Tower>& tower_ptr() const { return tower_; }
  const FieldPtr& field() const { return tower_->field(); }
  std::size_t n() const { return tower_->n(); }
  /// Dimension of B over Q, n * [L:Q].
  std::size_t dim_q() const { return n() * field()->degree(); }
  const CocycleTable& cocycle() const { return cocycle_; }
  /// xi(id,id) of the input table; one when no rescaling happened.
  const NFElem& rescale() const { return rescale_; }
  bool rescaled() const { return !rescale_.is_one(); }

  const Automorphism& sigma(std::size_t pos) const { return tower_->at(tower_->group()[pos]); }
  /// Group position of sr.
  std::size_t product(std::size_t s, std::size_t r) const { return mult_[s][r]; }
  std::size_t inverse_position(std::size_t s) const { return inv_[s]; }

  AlgElem zero() const;
  AlgElem one() const;
  /// e_s
  AlgElem generator(std::size_t s) const;
  /// y e_id
  AlgElem scalar(const NFElem& y) const;
  /// y e_s
  AlgElem monomial(const NFElem& y, std::size_t s) const;
  /// Q-basis element x^i e_s with index s * [L:Q] + i.
  AlgElem basis(std::size_t index) const;
  std::vector<Rat> to_rational(const AlgElem& a) const;
  AlgElem from_rational(const std::vector<Rat>& v) const;

 private:
  CrossedProduct(std::shared_ptr<const Tower> tower, CocycleTable cocycle, NFElem rescale);
  AlgebraPtr self() const { return shared_from_this(); }

  std::shared_ptr<const Tower> tower_;
  CocycleTable cocycle_;
  NFElem rescale_;
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inv_;
};

AlgElem mul(const AlgElem& a, const AlgElem& b);

/// Left multiplication on B as a right L-space with basis {e_r}:
/// b e_r = sum_t e_t M[t][r]. Multiplicative and injective.
Matrix<NFElem> regular_rep(const AlgElem& b);
/// Trace of regular_rep(b); InternalConsistencyError if it is not in k.
NFElem reduced_trace(const AlgElem& b);
bool is_invertible(const AlgElem& b);
/// NotInvertible for singular b.
AlgElem inverse(const AlgElem& b);

/// Right coordinates c_r of b = sum_r e_r c_r.
std::vector<NFElem> right_coordinates(const AlgElem& b);

}  // namespace posinv
