#pragma once

/**
 * @file positivity.hpp
 * @brief Positivity of tau at the ordering of Q given by the embedding.
 *
 * Two independent decisions: the signature of the involution trace form
 * Trd(tau(z) w) over Q (exact characteristic polynomial), and the Hermitian
 * matrix A transporting tau to conjugate transposition through the regular
 * representation (exact leading principal minors). The theorem checkers for
 * the field-theoretic consequences of positivity live here too.
 */

#include <optional>
#include <string>
#include <vector>

#include "posinv/embedding.hpp"
#include "posinv/involution.hpp"
#include "posinv/report.hpp"

namespace posinv {

enum class DefKind { kPosDef, kNegDef, kIndefinite, kDegenerate };

const char* to_string(DefKind k);

struct Definiteness {
  DefKind kind = DefKind::kDegenerate;
  std::size_t p = 0;
  std::size_t q = 0;

  friend bool operator==(const Definiteness&, const Definiteness&) = default;
};

Json to_json(const Definiteness& d);
std::string to_string(const Definiteness& d);

/// Gram matrix over k0 = Q on the basis x^i e_s (index s * [L:Q] + i).
struct GramMatrix {
  Matrix<Rat> entries;
};

/// T(z, w) = (Trd(tau(z) w) + Trd(tau(w) z)) / 2. InternalConsistencyError
/// if an entry leaves Q.
GramMatrix trace_form_gram(const Involution& tau);

/// Signature of a symmetric rational matrix by sign variations of its
/// characteristic polynomial.
Definiteness definiteness(const Matrix<Rat>& sym);
Definiteness definiteness(const GramMatrix& gm, const EmbeddingContext& ctx);

bool is_positive(const Involution& tau, const EmbeddingContext& ctx);

struct TransportMatrix {
  Matrix<NFElem> A;
  bool hermitian_normalized = false;
  /// Image of the generator under alpha.
  NFElem alpha_image;
  std::vector<std::string> notes;
};

/// Solves A lambda(tau(b)) = lambda(b)^{dagger alpha} A over L for b in a
/// generating set; InternalConsistencyError unless the solutions form a line,
/// StructuralError if no multiple is alpha-Hermitian.
TransportMatrix transport_hermitian(const Involution& tau);

struct TransportSignature {
  /// Signature of the Hermitian matrix embed(A), up to overall sign.
  Definiteness hermitian;
  /// Signature the trace form must have, (2(p^2 + q^2), 4pq); hyperbolic
  /// (n^2, n^2) when alpha is not complex conjugation.
  Definiteness implied_trace_form;
  bool sign_flipped = false;
  bool alpha_is_conjugation = true;
  std::vector<std::string> notes;
};

TransportSignature transport_definiteness(const TransportMatrix& tm, const EmbeddingContext& ctx);

/// Positive tau forces d > 0; the converse on the built tau is an observation.
CheckResult prop22_check(const Involution& tau, const EmbeddingContext& ctx);
/// For positive tau: a primitive element of L0 = L^alpha has all conjugates in L0.
CheckResult prop23_check(const Involution& tau, const EmbeddingContext& ctx);
/// For positive tau: alpha commutes with every automorphism of L.
CheckResult cor24_check(const Involution& tau, const EmbeddingContext& ctx);
/// (tau validates and is positive) iff alpha commutes with G.
CheckResult iff_check(const std::shared_ptr<const Tower>& t, const CocycleTable& c, const EmbeddingContext& ctx);

/// A primitive element of the subfield over Q, searched among integer
/// combinations of its basis with entries up to height_bound; SearchFailure otherwise.
NFElem primitive_element(const Subfield& sub, int height_bound = 8);

}  // namespace posinv
