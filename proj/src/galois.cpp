#include "posinv/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "posinv/errors.hpp"

namespace posinv {

namespace {

std::vector<Rat> mat_vec(const Matrix<Rat>& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.rows(), Rat(0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
  }
  return out;
}

Json lit(const NFElem& a) { return a.to_literal(); }

}  // namespace

NFElem Automorphism::operator()(const NFElem& a) const { return apply(*this, a); }

NFElem eval_at(const RatPoly& p, const NFElem& y) {
  NFElem acc = y.field()->zero();
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc *= y;
    acc += y.field()->rational(p.coeffs()[k]);
  }
  return acc;
}

Automorphism make_automorphism(std::string name, const NFElem& image) {
  const FieldPtr& f = image.field();
  const std::size_t n = f->degree();
  Matrix<Rat> m(n, n, Rat(0));
  NFElem p = f->one();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = p[i];
    p *= image;
  }
  return Automorphism{std::move(name), image, std::move(m)};
}

NFElem apply(const Automorphism& f, const NFElem& a) {
  require_same_field(f.image, a);
  return NFElem(a.field(), mat_vec(f.matrix, a.coeffs()));
}

Automorphism compose_maps(const Automorphism& f, const Automorphism& g) {
  return make_automorphism(f.name + "*" + g.name, apply(f, g.image));
}

Tower::Tower(FieldPtr field, NFElem sqrt_md, NFElem d, std::vector<Automorphism> autos, std::vector<std::string> group,
             std::string alpha)
    : field_(std::move(field)), sqrt_md_(std::move(sqrt_md)), d_(std::move(d)), autos_(std::move(autos)), alpha_(0) {
  require_same_field(field_->one(), sqrt_md_);
  require_same_field(field_->one(), d_);
  std::set<std::string> seen;
  for (const auto& a : autos_) {
    require_same_field(field_->one(), a.image);
    if (!seen.insert(a.name).second) throw StructuralError("duplicate automorphism name '" + a.name + "'");
  }
  const auto id = identity_index();
  for (const auto& name : group) {
    auto idx = find(name);
    if (!idx) throw StructuralError("group element '" + name + "' is not a defined automorphism");
    if (std::find(group_.begin(), group_.end(), *idx) != group_.end())
      throw StructuralError("group element '" + name + "' listed twice");
    group_.push_back(*idx);
  }
  if (id) {
    auto it = std::find(group_.begin(), group_.end(), *id);
    if (it != group_.end()) std::rotate(group_.begin(), it, it + 1);
  }
  auto a = find(alpha);
  if (!a) throw StructuralError("alpha '" + alpha + "' is not a defined automorphism");
  alpha_ = *a;
  table_.assign(autos_.size(), std::vector<std::optional<std::size_t>>(autos_.size()));
  for (std::size_t f = 0; f < autos_.size(); ++f)
    for (std::size_t g = 0; g < autos_.size(); ++g) table_[f][g] = find_image(apply(autos_[f], autos_[g].image));
}

const Automorphism& Tower::by_name(std::string_view name) const {
  auto i = find(name);
  if (!i) throw StructuralError("unknown automorphism '" + std::string(name) + "'");
  return autos_[*i];
}

std::optional<std::size_t> Tower::find(std::string_view name) const {
  for (std::size_t i = 0; i < autos_.size(); ++i)
    if (autos_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Tower::find_image(const NFElem& image) const {
  for (std::size_t i = 0; i < autos_.size(); ++i)
    if (autos_[i].image == image) return i;
  return std::nullopt;
}

std::optional<std::size_t> Tower::identity_index() const { return find_image(field_->generator()); }

std::size_t Tower::compose(std::size_t f, std::size_t g) const {
  if (!table_[f][g]) {
    throw ClosureViolation("composite " + autos_[f].name + " o " + autos_[g].name + " (x -> " +
                           apply(autos_[f], autos_[g].image).to_string() + ") is not in the automorphism set");
  }
  return *table_[f][g];
}

const Automorphism& Tower::compose(const Automorphism& f, const Automorphism& g) const {
  auto fi = find_image(f.image);
  auto gi = find_image(g.image);
  if (!fi || !gi) throw StructuralError("compose: automorphism not part of this tower");
  return autos_[compose(*fi, *gi)];
}

std::optional<std::size_t> Tower::group_position(std::size_t auto_index) const {
  for (std::size_t i = 0; i < group_.size(); ++i)
    if (group_[i] == auto_index) return i;
  return std::nullopt;
}

Report validate_tower(const Tower& t) {
  Report rep;
  const FieldPtr& f = t.field();
  const std::size_t n_autos = t.autos().size();

  {
    Stopwatch sw;
    CheckResult c("automorphism_roots");
    for (const auto& a : t.autos()) {
      NFElem r = eval_at(f->min_poly(), a.image);
      if (!r.is_zero()) c.fail({{"automorphism", a.name}, {"image", lit(a.image)}, {"m_of_image", lit(r)}});
    }
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("automorphism_bijective");
    for (std::size_t i = 0; i < n_autos; ++i) {
      const auto& a = t.at(i);
      if (determinant(a.matrix) == 0) c.fail({{"automorphism", a.name}, {"reason", "singular matrix"}});
      for (std::size_t j = 0; j < i; ++j)
        if (t.at(j).image == a.image) c.fail({{"automorphism", a.name}, {"duplicate_of", t.at(j).name}});
    }
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  const auto id = t.identity_index();
  {
    Stopwatch sw;
    CheckResult c("group_axioms");
    if (!id) c.fail({{"reason", "identity x -> x missing"}});
    for (std::size_t a = 0; a < n_autos; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < n_autos; ++b) {
        auto ab = t.try_compose(a, b);
        if (!ab) {
          c.fail({{"reason", "closure"}, {"f", t.at(a).name}, {"g", t.at(b).name},
                  {"image", lit(apply(t.at(a), t.at(b).image))}});
        } else if (id && *ab == *id) {
          has_inverse = true;
        }
      }
      if (!has_inverse) c.fail({{"reason", "inverse missing"}, {"f", t.at(a).name}});
    }
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("subgroup_G");
    const auto& g = t.group();
    if (g.empty() || !id || g.front() != *id) c.fail({{"reason", "identity not in G"}});
    for (auto a : g) {
      bool has_inverse = false;
      for (auto b : g) {
        auto ab = t.try_compose(a, b);
        if (!ab || !t.group_position(*ab)) {
          c.fail({{"reason", "closure"}, {"f", t.at(a).name}, {"g", t.at(b).name}});
        } else if (id && *ab == *id) {
          has_inverse = true;
        }
      }
      if (!has_inverse) c.fail({{"reason", "inverse missing in G"}, {"f", t.at(a).name}});
    }
    c.details["order"] = g.size();
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("quadratic_subfield");
    if (!t.d().is_rational()) {
      c.fail({{"reason", "d is not in k0 = Q"}, {"d", lit(t.d())}});
    } else {
      const Rat d = t.d()[0];
      if (d == 0) c.fail({{"reason", "d = 0, k is not a quadratic extension"}});
      const Rat md = -d;
      if (md > 0 && mpz_perfect_square_p(md.get_num_mpz_t()) && mpz_perfect_square_p(md.get_den_mpz_t()))
        c.fail({{"reason", "-d is a square in Q, k is not a field"}, {"d", to_string(d)}});
    }
    NFElem sq = t.sqrt_md() * t.sqrt_md();
    if (sq != -t.d()) c.fail({{"reason", "sqrt_minus_d^2 != -d"}, {"square", lit(sq)}});
    for (const auto& a : t.autos())
      if (apply(a, t.d()) != t.d()) c.fail({{"reason", "d not fixed"}, {"automorphism", a.name}});
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("G_fixes_k");
    for (auto a : t.group())
      if (apply(t.at(a), t.sqrt_md()) != t.sqrt_md())
        c.fail({{"automorphism", t.at(a).name}, {"image_of_sqrt_minus_d", lit(apply(t.at(a), t.sqrt_md()))}});
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("alpha");
    const auto& al = t.alpha();
    if (!id || t.try_compose(t.alpha_index(), t.alpha_index()) != id)
      c.fail({{"reason", "alpha^2 != id"}, {"alpha", al.name}});
    if (apply(al, t.sqrt_md()) != -t.sqrt_md())
      c.fail({{"reason", "alpha(sqrt(-d)) != -sqrt(-d)"}, {"image", lit(apply(al, t.sqrt_md()))}});
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("galois_L_over_k");
    Subfield fixed = fixed_field(t, t.group());
    c.details["order_G"] = t.n();
    c.details["degree_L"] = t.degree();
    c.details["fixed_field_dimension"] = fixed.dimension();
    if (2 * t.n() != t.degree()) c.fail({{"reason", "|G| != [L:k]"}, {"order_G", t.n()}, {"L_over_k", t.degree() / 2}});
    if (fixed.dimension() != 2) c.fail({{"reason", "fixed field of G is not k"}, {"dimension", fixed.dimension()}});
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  {
    Stopwatch sw;
    CheckResult c("automorphisms_complete");
    c.details["count"] = n_autos;
    c.details["degree"] = t.degree();
    if (n_autos != t.degree()) c.fail({{"reason", "autos is not all of Aut(L/Q)"}, {"count", n_autos}});
    c.seconds = sw.seconds();
    rep.add(std::move(c));
  }
  return rep;
}

Subfield::Subfield(FieldPtr field, std::vector<NFElem> basis)
    : field_(std::move(field)), basis_(std::move(basis)), span_(field_->degree(), basis_.size(), Rat(0)) {
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    require_same_field(field_->one(), basis_[j]);
    for (std::size_t i = 0; i < field_->degree(); ++i) span_(i, j) = basis_[j][i];
  }
}

Subfield Subfield::rationals(const FieldPtr& field) { return Subfield(field, {field->one()}); }

std::optional<std::vector<Rat>> Subfield::coordinates(const NFElem& a) const {
  require_same_field(field_->one(), a);
  return solve(span_, a.coeffs());
}

Subfield fixed_field(const FieldPtr& field, const std::vector<const Automorphism*>& maps) {
  const std::size_t n = field->degree();
  Matrix<Rat> stack(maps.size() * n, n, Rat(0));
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stack(k * n + i, j) = maps[k]->matrix(i, j) - (i == j ? 1 : 0);
  std::vector<NFElem> basis;
  for (auto& v : kernel(stack)) basis.push_back(field->element(std::move(v)));
  return Subfield(field, std::move(basis));
}

Subfield fixed_field(const Tower& t, const std::vector<std::size_t>& indices) {
  std::vector<const Automorphism*> maps;
  for (auto i : indices) maps.push_back(&t.at(i));
  return fixed_field(t.field(), maps);
}

std::vector<NFElem> fixed_field_basis(const Tower& t, const std::vector<std::size_t>& indices) {
  return fixed_field(t, indices).basis();
}

std::vector<std::string> commute_violations(const Tower& t) {
  std::vector<std::string> out;
  const auto& al = t.alpha();
  for (auto s : t.group()) {
    const auto& sg = t.at(s);
    if (apply(al, sg.image) != apply(sg, al.image)) out.push_back(sg.name);
  }
  return out;
}

bool condition_commute(const Tower& t) { return commute_violations(t).empty(); }

std::vector<NFElem> minimal_polynomial(const NFElem& a, const Subfield& subfield) {
  const FieldPtr& f = a.field();
  const std::size_t n = f->degree();
  const std::size_t s = subfield.dimension();
  std::vector<NFElem> powers{f->one()};
  for (std::size_t deg = 1; deg <= n; ++deg) {
    powers.push_back(powers.back() * a);
    Matrix<Rat> sys(n, deg * s, Rat(0));
    for (std::size_t j = 0; j < deg; ++j)
      for (std::size_t t = 0; t < s; ++t) {
        NFElem col = subfield.basis()[t] * powers[j];
        for (std::size_t i = 0; i < n; ++i) sys(i, j * s + t) = col[i];
      }
    auto sol = solve(sys, powers[deg].coeffs());
    if (!sol) continue;
    std::vector<NFElem> poly;
    for (std::size_t j = 0; j < deg; ++j) {
      NFElem c = f->zero();
      for (std::size_t t = 0; t < s; ++t) c += (*sol)[j * s + t] * subfield.basis()[t];
      poly.push_back(-c);
    }
    poly.push_back(f->one());
    return poly;
  }
  throw InternalConsistencyError("no annihilating polynomial of degree <= [L:Q] for " + a.to_string());
}

RatPoly minimal_polynomial(const NFElem& a) {
  auto p = minimal_polynomial(a, Subfield::rationals(a.field()));
  std::vector<Rat> c;
  for (const auto& e : p) c.push_back(e[0]);
  return RatPoly(std::move(c));
}

std::size_t roots_in_subfield(const RatPoly& p, const Subfield& subfield) {
  std::size_t count = 0;
  for (const auto& [r, mult] : roots_in_field(subfield.field(), p))
    if (subfield.contains(r)) count += static_cast<std::size_t>(mult);
  return count;
}

std::size_t roots_in_subfield(const std::vector<NFElem>& p, const Subfield& subfield) {
  const FieldPtr& f = subfield.field();
  if (std::all_of(p.begin(), p.end(), [](const NFElem& c) { return c.is_rational(); })) {
    std::vector<Rat> c;
    for (const auto& e : p) c.push_back(e[0]);
    return roots_in_subfield(RatPoly(std::move(c)), subfield);
  }
  // Norm polynomial prod_s s(p), which has rational coefficients when L/Q is Galois.
  std::vector<NFElem> norm{f->one()};
  for (const auto& s : discover_automorphisms(f)) {
    std::vector<NFElem> next(norm.size() + p.size() - 1, f->zero());
    for (std::size_t i = 0; i < norm.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += norm[i] * apply(s, p[j]);
    norm = std::move(next);
  }
  std::vector<Rat> nc;
  for (const auto& e : norm) {
    if (!e.is_rational()) throw DomainError("roots_in_subfield: L is not Galois over Q");
    nc.push_back(e[0]);
  }
  std::size_t count = 0;
  for (const auto& [r, mult] : roots_in_field(f, RatPoly(std::move(nc)))) {
    (void)mult;
    if (!subfield.contains(r)) continue;
    // Multiplicity of r in p by repeated synthetic division.
    std::vector<NFElem> q = p;
    while (q.size() > 1) {
      std::vector<NFElem> quot(q.size() - 1, f->zero());
      NFElem acc = f->zero();
      for (std::size_t k = q.size(); k-- > 0;) {
        acc = acc * r + q[k];
        if (k > 0) quot[k - 1] = acc;
      }
      if (!acc.is_zero()) break;
      ++count;
      q = std::move(quot);
    }
  }
  return count;
}

std::vector<Automorphism> discover_automorphisms(const FieldPtr& field) {
  std::vector<Automorphism> out;
  auto roots = roots_in_field(field, field->min_poly());
  std::stable_partition(roots.begin(), roots.end(),
                        [&](const auto& r) { return r.first == field->generator(); });
  for (std::size_t i = 0; i < roots.size(); ++i) out.push_back(make_automorphism("g" + std::to_string(i), roots[i].first));
  return out;
}

std::vector<Automorphism> discover_automorphisms(const Tower& t) {
  auto out = discover_automorphisms(t.field());
  for (auto& a : out)
    if (auto i = t.find_image(a.image)) a.name = t.at(*i).name;
  return out;
}

CheckResult lemma21_check(const Tower& t) {
  Stopwatch sw;
  CheckResult c("lemma21_galois_count");
  const FieldPtr& f = t.field();
  const std::size_t n = f->degree();
  Subfield fixed_g = fixed_field(t, t.group());
  if (2 * t.n() != n || fixed_g.dimension() != 2) {
    c.not_applicable("L/k is not Galois with group G");
    c.seconds = sw.seconds();
    return c;
  }
  const auto& al = t.alpha();
  const NFElem& s = t.sqrt_md();
  Subfield l0 = fixed_field(t, {t.alpha_index()});
  {
    Matrix<Rat> both(n, 2 * l0.dimension(), Rat(0));
    for (std::size_t j = 0; j < l0.dimension(); ++j) {
      NFElem b = l0.basis()[j] * s;
      for (std::size_t i = 0; i < n; ++i) {
        both(i, j) = l0.basis()[j][i];
        both(i, l0.dimension() + j) = b[i];
      }
    }
    if (rank(both) != n) throw StructuralError("L is not L0(sqrt(-d)): decomposition a + b sqrt(-d) fails");
  }
  const NFElem two_s_inv = (Rat(2) * s).inverse();
  auto decompose = [&](const NFElem& x) {
    NFElem ax = apply(al, x);
    NFElem a = Rat(1, 2) * (x + ax);
    NFElem b = (x - ax) * two_s_inv;
    if (!l0.contains(a) || !l0.contains(b)) throw StructuralError("decomposition coefficients not in L0");
    return std::make_pair(a, b);
  };
  std::vector<std::pair<NFElem, NFElem>> parts;
  for (std::size_t i = 0; i < n; ++i) parts.push_back(decompose(f->basis(i)));

  std::vector<NFElem> found;
  Json constructed = Json::array();
  for (auto gi : t.group()) {
    const auto& g = t.at(gi);
    for (int sign : {1, -1}) {
      // Images of the power basis under a + b s -> g(a) +/- g(b) s.
      std::vector<NFElem> img;
      for (const auto& [a, b] : parts) img.push_back(apply(g, a) + Rat(sign) * (apply(g, b) * s));
      auto map = [&](const NFElem& x) {
        NFElem out = f->zero();
        for (std::size_t i = 0; i < n; ++i)
          if (x[i] != 0) out += x[i] * img[i];
        return out;
      };
      const std::string name = g.name + (sign > 0 ? "'" : "''");
      bool ok = map(f->one()).is_one();
      if (!ok) c.fail({{"map", name}, {"reason", "does not fix 1"}});
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (map(f->basis(i) * f->basis(j)) != img[i] * img[j]) {
            ok = false;
            c.fail({{"map", name}, {"reason", "not multiplicative"}, {"i", i}, {"j", j}});
          }
        }
      if (!ok) continue;
      constructed.push_back({{"map", name}, {"image", lit(img[1 % n])}});
      const NFElem& gen_image = n > 1 ? img[1] : img[0];
      if (std::find(found.begin(), found.end(), gen_image) == found.end()) found.push_back(gen_image);
    }
  }
  const std::size_t discovered = roots_in_field(f, f->min_poly()).size();
  c.details["order_G"] = t.n();
  c.details["constructed_distinct"] = found.size();
  c.details["roots_of_m_in_L"] = discovered;
  c.details["degree_L_over_k0"] = n;
  c.details["maps"] = constructed;
  if (found.size() != n) c.fail({{"reason", "constructed automorphism count != [L:k0]"}, {"count", found.size()}});
  if (discovered != n) c.fail({{"reason", "|Aut(L/k0)| != [L:k0]"}, {"count", discovered}});
  c.seconds = sw.seconds();
  return c;
}

}  // namespace posinv
