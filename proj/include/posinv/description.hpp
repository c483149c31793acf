#pragma once

/**
 * @file description.hpp
 * @brief Algebra-description files and the objects built from them.
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posinv/crossed_product.hpp"
#include "posinv/embedding.hpp"
#include "posinv/galois.hpp"
#include "posinv/report.hpp"

namespace posinv {

using Literal = std::vector<Rat>;

struct AlgebraDescription {
  std::string name;
  std::string note;
  Literal min_poly;  // constant first
  Literal sqrt_minus_d;
  Rat d;
  std::vector<std::pair<std::string, Literal>> automorphisms;
  std::vector<std::string> group;
  std::string alpha;
  std::vector<std::pair<std::string, Literal>> cocycle;  // keys "s,r"
  std::optional<std::pair<std::string, std::string>> embedding_hint;
  unsigned default_bits = kDefaultPrecisionBits;
  unsigned max_bits = kDefaultMaxPrecisionBits;

  friend bool operator==(const AlgebraDescription&, const AlgebraDescription&) = default;
};

/// InputError on malformed content, including bad rationals and unknown names.
AlgebraDescription parse_description(const Json& j);
AlgebraDescription parse_description_text(const std::string& text);
AlgebraDescription load_description(const std::string& path);
Json to_json(const AlgebraDescription& desc);
std::string serialize(const AlgebraDescription& desc);

struct Instance {
  AlgebraDescription desc;
  FieldPtr field;
  std::shared_ptr<const Tower> tower;
  CocycleTable cocycle;
  EmbeddingContext ctx;
  /// Automorphism in the description acting as complex conjugation, if any.
  std::optional<std::size_t> conjugation_index;
  bool alpha_is_conjugation = false;
};

/// Precision arguments of zero keep the description's values.
/// InputError for inconsistent data, StructuralError for a reducible m.
Instance build_instance(const AlgebraDescription& desc, unsigned precision_bits = 0, unsigned max_bits = 0);

}  // namespace posinv
