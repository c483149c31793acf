#pragma once

/**
 * @file involution.hpp
 * @brief The involution tau(x e_s) = e_s^-1 alpha(x) on a crossed product.
 */

#include <vector>

#include "posinv/crossed_product.hpp"
#include "posinv/report.hpp"

namespace posinv {

class Involution {
 public:
  Involution(AlgebraPtr algebra, std::vector<AlgElem> gen_images);

  const CrossedProduct& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Automorphism& alpha() const { return algebra_->tower().alpha(); }
  /// tau(e_s) = e_s^-1 by group position.
  const std::vector<AlgElem>& gen_images() const { return gen_images_; }

  AlgElem operator()(const AlgElem& a) const;
  /// Matrix of tau on the Q-basis x^i e_s.
  Matrix<Rat> rational_matrix() const;

 private:
  AlgebraPtr algebra_;
  std::vector<AlgElem> gen_images_;
};

/// No axioms are checked here; StructuralError if some e_s is singular.
Involution build_tau(const AlgebraPtr& algebra);

/// Anti-multiplicativity and involutivity on the Q-basis, tau(sqrt(-d)) = -sqrt(-d),
/// and tau fixing Q. Witnesses are basis pairs.
Report validate_involution(const Involution& tau);

/// Q-basis of Sym(B, tau); InternalConsistencyError unless its size is n^2.
std::vector<AlgElem> symmetric_basis(const Involution& tau);
std::vector<AlgElem> skew_basis(const Involution& tau);

bool is_unitary_element(const Involution& tau, const AlgElem& u);

/// (1 - s)(1 + s)^-1 for tau(s) = -s. DomainError if s is not skew,
/// NotInvertible if 1 + s is singular.
AlgElem cayley(const Involution& tau, const AlgElem& s);

/// zeta * 1 for every root of unity zeta in L with alpha(zeta) zeta = 1,
/// ordered by multiplicative order.
std::vector<AlgElem> torsion_unitaries(const Involution& tau);

/// Cyclotomic polynomial Phi_k.
RatPoly cyclotomic(unsigned k);

}  // namespace posinv
