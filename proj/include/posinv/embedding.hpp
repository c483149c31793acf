#pragma once

/**
 * @file embedding.hpp
 * @brief A certified complex embedding of L = Q[x]/(m) and sign decisions through it.
 *
 * An EmbeddingContext fixes one root of m (chosen near a hint) and a working
 * precision. Elements are mapped to complex boxes that provably contain their
 * image. Zero is only ever decided exactly; the embedding is used for strict
 * sign separation, with precision doubled up to a cap.
 */

#include <complex>
#include <memory>
#include <optional>

#include "posinv/interval.hpp"
#include "posinv/number_field.hpp"
#include "posinv/roots.hpp"

namespace posinv {

enum class SignVal { kNeg = -1, kZero = 0, kPos = 1 };

const char* to_string(SignVal s);

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kDefaultMaxPrecisionBits = 4096;

class EmbeddingContext {
 public:
  /// Isolates the roots of the field polynomial and selects the one nearest to the hint.
  static EmbeddingContext create(const FieldPtr& field, std::complex<long double> hint,
                                 unsigned precision_bits = kDefaultPrecisionBits,
                                 unsigned max_precision_bits = kDefaultMaxPrecisionBits);

  const FieldPtr& field() const { return field_; }
  unsigned precision_bits() const { return precision_bits_; }
  unsigned max_precision_bits() const { return max_precision_bits_; }
  std::size_t root_index() const { return root_index_; }
  const RootIsolation& isolation() const { return *isolation_; }
  /// Box around the selected root at the current precision.
  const ComplexBox& root_box() const { return root_box_; }

  /// Same root, new precision; the receiver is unchanged.
  EmbeddingContext with_precision(unsigned bits) const;
  /// Records the generator image of the automorphism acting as complex
  /// conjugation, which lets sign_of certify reality of irrational elements.
  EmbeddingContext with_conjugation(const NFElem& generator_image) const;
  const std::optional<NFElem>& conjugation() const { return conjugation_; }

 private:
  EmbeddingContext() = default;

  FieldPtr field_;
  std::shared_ptr<const RootIsolation> isolation_;
  std::size_t root_index_ = 0;
  unsigned precision_bits_ = kDefaultPrecisionBits;
  unsigned max_precision_bits_ = kDefaultMaxPrecisionBits;
  ComplexBox root_box_;
  std::optional<NFElem> conjugation_;
};

/// Box guaranteed to contain the image of a; shrinks as precision grows.
ComplexBox embed(const NFElem& a, const EmbeddingContext& ctx);

/// Exact zero test, then interval separation with precision doubling.
/// DomainError if a is not certifiably real, PrecisionExhausted past the cap.
SignVal sign_of(const NFElem& a, const EmbeddingContext& ctx);
SignVal sign_of(const Rat& q);

/// True iff the automorphism x -> alpha_image realizes complex conjugation
/// under the embedding. alpha_image must be a root of m.
bool verify_alpha_is_conjugation(const NFElem& alpha_image, const EmbeddingContext& ctx);

}  // namespace posinv
