#include "posinv/description.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "posinv/errors.hpp"

namespace posinv {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

Literal parse_literal(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputError(what + " must be a non-empty array of rational strings");
  Literal out;
  for (const auto& e : j) out.push_back(parse_rational(as_string(e, what + " entry")));
  return out;
}

Json literal_json(const Literal& l) {
  Json a = Json::array();
  for (const auto& q : l) a.push_back(to_string(q));
  return a;
}

unsigned parse_bits(const Json& j, const char* key, unsigned fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<unsigned long long>() == 0 || v.get<unsigned long long>() > (1u << 20))
    throw InputError(std::string("precision.") + key + " must be a positive integer");
  return v.get<unsigned>();
}

long double parse_decimal(const std::string& s) {
  std::size_t used = 0;
  long double v = 0;
  try {
    v = std::stold(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InputError("malformed decimal \"" + s + "\" in embedding_hint");
  return v;
}

NFElem element_of(const FieldPtr& field, const Literal& l, const std::string& what) {
  if (l.size() > field->degree())
    throw InputError(what + " has " + std::to_string(l.size()) + " coefficients, more than [L:Q] = " +
                     std::to_string(field->degree()));
  return field->element(l);
}

}  // namespace

AlgebraDescription parse_description(const Json& j) {
  if (!j.is_object()) throw InputError("algebra description must be a JSON object");
  AlgebraDescription d;
  if (j.contains("name")) d.name = as_string(j.at("name"), "name");
  if (j.contains("note")) d.note = as_string(j.at("note"), "note");
  d.min_poly = parse_literal(member(j, "min_poly"), "min_poly");
  d.sqrt_minus_d = parse_literal(member(j, "sqrt_minus_d"), "sqrt_minus_d");
  d.d = parse_rational(as_string(member(j, "d"), "d"));

  const Json& autos = member(j, "automorphisms");
  if (!autos.is_object() || autos.empty()) throw InputError("automorphisms must be a non-empty object");
  std::set<std::string> names;
  for (const auto& [name, lit] : autos.items()) {
    names.insert(name);
    d.automorphisms.emplace_back(name, parse_literal(lit, "automorphism " + name));
  }

  const Json& group = member(j, "group_G");
  if (!group.is_array() || group.empty()) throw InputError("group_G must be a non-empty array of names");
  for (const auto& g : group) {
    std::string name = as_string(g, "group_G entry");
    if (!names.count(name)) throw InputError("group_G names undefined automorphism '" + name + "'");
    if (std::find(d.group.begin(), d.group.end(), name) != d.group.end())
      throw InputError("group_G lists '" + name + "' twice");
    d.group.push_back(name);
  }
  d.alpha = as_string(member(j, "alpha"), "alpha");
  if (!names.count(d.alpha)) throw InputError("alpha names undefined automorphism '" + d.alpha + "'");

  const Json& coc = member(j, "cocycle");
  if (!coc.is_object()) throw InputError("cocycle must be an object keyed \"s,r\"");
  for (const auto& [key, lit] : coc.items()) d.cocycle.emplace_back(key, parse_literal(lit, "cocycle " + key));

  if (j.contains("embedding_hint")) {
    const Json& h = j.at("embedding_hint");
    if (!h.is_array() || h.size() != 2) throw InputError("embedding_hint must be [re, im]");
    d.embedding_hint = std::make_pair(as_string(h[0], "embedding_hint"), as_string(h[1], "embedding_hint"));
    parse_decimal(d.embedding_hint->first);
    parse_decimal(d.embedding_hint->second);
  }
  if (j.contains("precision")) {
    const Json& p = j.at("precision");
    if (!p.is_object()) throw InputError("precision must be an object");
    d.default_bits = parse_bits(p, "default_bits", d.default_bits);
    d.max_bits = parse_bits(p, "max_bits", d.max_bits);
  }
  if (d.max_bits < d.default_bits) throw InputError("precision.max_bits is below precision.default_bits");
  return d;
}

AlgebraDescription parse_description_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_description(j);
}

AlgebraDescription load_description(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_description_text(ss.str());
}

Json to_json(const AlgebraDescription& d) {
  Json j = Json::object();
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.note.empty()) j["note"] = d.note;
  j["min_poly"] = literal_json(d.min_poly);
  j["sqrt_minus_d"] = literal_json(d.sqrt_minus_d);
  j["d"] = to_string(d.d);
  Json autos = Json::object();
  for (const auto& [name, lit] : d.automorphisms) autos[name] = literal_json(lit);
  j["automorphisms"] = autos;
  j["group_G"] = d.group;
  j["alpha"] = d.alpha;
  Json coc = Json::object();
  for (const auto& [key, lit] : d.cocycle) coc[key] = literal_json(lit);
  j["cocycle"] = coc;
  if (d.embedding_hint) j["embedding_hint"] = {d.embedding_hint->first, d.embedding_hint->second};
  j["precision"] = {{"default_bits", d.default_bits}, {"max_bits", d.max_bits}};
  return j;
}

std::string serialize(const AlgebraDescription& d) { return to_json(d).dump(2) + "\n"; }

Instance build_instance(const AlgebraDescription& desc, unsigned precision_bits, unsigned max_bits) {
  RatPoly m(desc.min_poly);
  if (m.degree() < 1) throw InputError("min_poly must have positive degree");
  const FieldPtr L = NumberField::create(m);

  std::vector<Automorphism> autos;
  for (const auto& [name, lit] : desc.automorphisms)
    autos.push_back(make_automorphism(name, element_of(L, lit, "automorphism " + name)));
  std::shared_ptr<const Tower> tower;
  try {
    tower = std::make_shared<const Tower>(L, element_of(L, desc.sqrt_minus_d, "sqrt_minus_d"),
                                               L->rational(desc.d), std::move(autos), desc.group, desc.alpha);
  } catch (const StructuralError& e) {
    throw InputError(e.what());
  }

  std::vector<std::pair<std::string, NFElem>> entries;
  for (const auto& [key, lit] : desc.cocycle) entries.emplace_back(key, element_of(L, lit, "cocycle " + key));
  CocycleTable cocycle = cocycle_from_entries(*tower, entries);

  const unsigned bits = precision_bits ? precision_bits : desc.default_bits;
  unsigned cap = max_bits ? max_bits : desc.max_bits;
  if (cap < bits) cap = bits;

  // With no hint, take the first root at which alpha acts as conjugation.
  std::vector<std::complex<long double>> hints;
  if (desc.embedding_hint) {
    hints.emplace_back(parse_decimal(desc.embedding_hint->first), parse_decimal(desc.embedding_hint->second));
  } else {
    RootIsolation iso(m);
    for (std::size_t i = 0; i < iso.size(); ++i) hints.push_back(iso.disk(i).approx());
  }
  const Tower& t = *tower;
  std::optional<Instance> inst;
  for (std::size_t h = 0; h < hints.size(); ++h) {
    EmbeddingContext ctx = EmbeddingContext::create(L, hints[h], bits, cap);
    std::optional<std::size_t> conj;
    for (std::size_t i = 0; i < t.autos().size() && !conj; ++i) {
      if (!eval_at(m, t.at(i).image).is_zero()) continue;
      if (verify_alpha_is_conjugation(t.at(i).image, ctx)) conj = i;
    }
    const bool alpha_conj = conj && *conj == t.alpha_index();
    if (h == 0 || alpha_conj)
      inst.emplace(Instance{desc, L, tower, cocycle, conj ? ctx.with_conjugation(t.at(*conj).image) : ctx, conj,
                            alpha_conj});
    if (alpha_conj) break;
  }
  return std::move(*inst);
}

}  // namespace posinv
