#pragma once

/**
 * @file codebook.hpp
 * @brief Unitary codebooks from (B, tau): generation, exact diversity, export.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posinv/embedding.hpp"
#include "posinv/interval.hpp"
#include "posinv/involution.hpp"
#include "posinv/report.hpp"

namespace posinv {

enum class Strategy { kProducts, kCayley, kMixed };

const char* to_string(Strategy s);
/// InputError for unknown names.
Strategy parse_strategy(const std::string& s);

struct CodebookParams {
  Strategy strategy = Strategy::kProducts;
  std::size_t size_limit = 16;
  int height_bound = 8;
  std::uint64_t seed = 0;
};

struct Codebook {
  AlgebraPtr algebra;
  std::vector<AlgElem> codewords;
  CodebookParams params;
};

/// Products: breadth-first closure of {e_s} and the torsion unitaries.
/// Cayley: transforms of seeded random skew elements, s = 0 first.
/// Mixed: products up to half the limit, then Cayley.
/// InputError when size_limit < 2 or height_bound < 1.
Codebook generate(const Involution& tau, const CodebookParams& params);

struct DiversityReport {
  bool fully_diverse = false;
  std::size_t pairs = 0;
  /// Codeword index pairs with det(lambda(X) - lambda(Y)) = 0 in L.
  std::vector<std::pair<std::size_t, std::size_t>> singular_pairs;
  /// min over pairs of |det|^(1/n); absent when some determinant vanishes.
  std::optional<RealInterval> diversity_product;
  unsigned precision_bits = 0;
};

/// InputError for fewer than two codewords.
DiversityReport diversity(const Codebook& cb, const EmbeddingContext& ctx);

struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<ComplexBox> entries;  // row-major
  /// Enclosure of max |(M^dagger M - I)_ij|.
  RealInterval residual;
  bool unitary = false;
  unsigned precision_bits = 0;
};

/// lambda(u) embedded entrywise; the residual is certified below
/// 2^-(bits/2), raising precision up to the cap. A residual bounded away
/// from that threshold marks the matrix non-unitary.
std::vector<ComplexMatrix> to_matrices(const Codebook& cb, const EmbeddingContext& ctx);

Json export_json(const Codebook& cb, const std::vector<ComplexMatrix>& mats, const DiversityReport& div,
                 const EmbeddingContext& ctx, const std::string& field_name);
std::string export_csv(const std::vector<ComplexMatrix>& mats, const EmbeddingContext& ctx);
/// Codewords from the exact part of an export.
std::vector<AlgElem> load_codewords(const Json& j, const AlgebraPtr& algebra);

/// Enclosure of x^(1/k) for x >= 0.
RealInterval nth_root(const RealInterval& x, unsigned k, unsigned bits);

}  // namespace posinv
