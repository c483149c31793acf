#pragma once

/**
 * @file factor.hpp
 * @brief Factorization over Q by certified root-subset recombination.
 *
 * A monic integer polynomial has only monic integer factors (Gauss), so a
 * factor corresponds to a subset of complex roots whose elementary symmetric
 * functions are integers. Root enclosures decide integrality; each candidate
 * is confirmed by exact division. Exponential in the degree, so the degree is
 * capped; every polynomial in this project stays well below the cap.
 */

#include <utility>
#include <vector>

#include "posinv/rational.hpp"

namespace posinv {

inline constexpr int kMaxFactorDegree = 24;

/// Monic irreducible factors with multiplicity; the product times the leading
/// coefficient of p recovers p.
std::vector<std::pair<RatPoly, int>> factor_rational(const RatPoly& p);

bool is_irreducible(const RatPoly& p);

}  // namespace posinv
