#pragma once

/**
 * @file galois.hpp
 * @brief The tower Q = k0 in k = Q(sqrt(-d)) in L with its automorphisms.
 *
 * L is a single absolute field Q[x]/(m). An automorphism is stored as the
 * image of x together with its matrix on the power basis, so applying it is
 * a matrix-vector product. Subfields are Q-subspaces cut out as fixed
 * fields.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posinv/linalg.hpp"
#include "posinv/number_field.hpp"
#include "posinv/report.hpp"

namespace posinv {

struct Automorphism {
  std::string name;
  NFElem image;
  /// Column j holds the coordinates of image^j.
  Matrix<Rat> matrix;

  NFElem operator()(const NFElem& a) const;
};

/// p(y) for p over Q.
NFElem eval_at(const RatPoly& p, const NFElem& y);

/// Builds the matrix; no validation (see validate_tower).
Automorphism make_automorphism(std::string name, const NFElem& image);
NFElem apply(const Automorphism& f, const NFElem& a);
/// x -> f(g(x)), without any closure lookup.
Automorphism compose_maps(const Automorphism& f, const Automorphism& g);

class Tower {
 public:
  /// Throws StructuralError for duplicate or undefined names.
  Tower(FieldPtr field, NFElem sqrt_md, NFElem d, std::vector<Automorphism> autos, std::vector<std::string> group,
        std::string alpha);

  const FieldPtr& field() const { return field_; }
  std::size_t degree() const { return field_->degree(); }
  const NFElem& sqrt_md() const { return sqrt_md_; }
  const NFElem& d() const { return d_; }
  const std::vector<Automorphism>& autos() const { return autos_; }
  /// Indices into autos(); the identity (when present) comes first, then input order.
  const std::vector<std::size_t>& group() const { return group_; }
  std::size_t n() const { return group_.size(); }
  std::size_t alpha_index() const { return alpha_; }
  const Automorphism& alpha() const { return autos_[alpha_]; }
  const Automorphism& at(std::size_t i) const { return autos_[i]; }
  const Automorphism& by_name(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::optional<std::size_t> find_image(const NFElem& image) const;
  std::optional<std::size_t> identity_index() const;

  /// Index of f o g in autos(); ClosureViolation when the composite is missing.
  std::size_t compose(std::size_t f, std::size_t g) const;
  /// f o g looked up in autos(); ClosureViolation when missing.
  const Automorphism& compose(const Automorphism& f, const Automorphism& g) const;
  /// Composite index if it lies in autos().
  std::optional<std::size_t> try_compose(std::size_t f, std::size_t g) const { return table_[f][g]; }

  /// Position of an automorphism inside group(), if it belongs to G.
  std::optional<std::size_t> group_position(std::size_t auto_index) const;

 private:
  FieldPtr field_;
  NFElem sqrt_md_;
  NFElem d_;
  std::vector<Automorphism> autos_;
  std::vector<std::size_t> group_;
  std::size_t alpha_;
  std::vector<std::vector<std::optional<std::size_t>>> table_;
};

/// Root, automorphism, group, subgroup, quadratic-subfield and Galois checks.
Report validate_tower(const Tower& t);

/// A Q-subspace of L given by a basis, with exact membership.
class Subfield {
 public:
  Subfield(FieldPtr field, std::vector<NFElem> basis);
  static Subfield rationals(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<NFElem>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::optional<std::vector<Rat>> coordinates(const NFElem& a) const;
  bool contains(const NFElem& a) const { return coordinates(a).has_value(); }

 private:
  FieldPtr field_;
  std::vector<NFElem> basis_;
  Matrix<Rat> span_;
};

/// Joint kernel of (f - id) over the given automorphisms.
Subfield fixed_field(const FieldPtr& field, const std::vector<const Automorphism*>& maps);
Subfield fixed_field(const Tower& t, const std::vector<std::size_t>& indices);
std::vector<NFElem> fixed_field_basis(const Tower& t, const std::vector<std::size_t>& indices);

/// alpha o s == s o alpha for every s in G.
bool condition_commute(const Tower& t);
/// Names of the elements of G that fail to commute with alpha.
std::vector<std::string> commute_violations(const Tower& t);

/// Monic minimal polynomial of a over the subfield (coefficients in L, constant first).
std::vector<NFElem> minimal_polynomial(const NFElem& a, const Subfield& subfield);
/// Minimal polynomial over Q.
RatPoly minimal_polynomial(const NFElem& a);

/// Roots of p in L with multiplicity.
std::vector<std::pair<NFElem, int>> roots_in_field(const FieldPtr& field, const RatPoly& p);
/// Number of roots of p in the subfield, counted with multiplicity.
std::size_t roots_in_subfield(const RatPoly& p, const Subfield& subfield);
/// Coefficients in L (constant first); they are reduced to Q through the norm
/// over the discovered automorphism group, so L must be Galois over Q.
std::size_t roots_in_subfield(const std::vector<NFElem>& p, const Subfield& subfield);

/// All automorphisms of L, one per root of m in L. Names reuse the tower's
/// names where the image matches.
std::vector<Automorphism> discover_automorphisms(const FieldPtr& field);
std::vector<Automorphism> discover_automorphisms(const Tower& t);

/// Builds f' and f'' from the decomposition L = L0 + L0 sqrt(-d) for each f in G,
/// validates them and compares the count with [L:Q].
CheckResult lemma21_check(const Tower& t);

}  // namespace posinv
