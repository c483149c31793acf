// Galois tower, crossed product, involution and description files.

#include <doctest.h>

#include "posinv/errors.hpp"
#include "posinv/involution.hpp"
#include "test_util.hpp"

using namespace posinv;
using testutil::q;

namespace {

NFElem xpow(const FieldPtr& f, unsigned k) { return f->generator().pow(k); }

std::size_t idx(const Tower& t, const char* name) { return *t.find(name); }

}  // namespace

TEST_CASE("description round trip") {
  for (const auto& name : testutil::catalog()) {
    CAPTURE(name);
    AlgebraDescription d = load_description(testutil::fixture(name));
    AlgebraDescription again = parse_description_text(serialize(d));
    CHECK(again == d);
    CHECK(serialize(again) == serialize(d));
  }
}

TEST_CASE("description errors") {
  Json j = to_json(load_description(testutil::fixture("FIX-E8")));
  SUBCASE("bad rational") {
    j["d"] = "1/0";
    CHECK_THROWS_AS(parse_description(j), InputError);
  }
  SUBCASE("missing field") {
    j.erase("alpha");
    CHECK_THROWS_AS(parse_description(j), InputError);
  }
  SUBCASE("undefined group name") {
    j["group_G"].push_back("nope");
    CHECK_THROWS_AS(parse_description(j), InputError);
  }
  SUBCASE("cocycle misses a pair") {
    j["cocycle"].erase("s5,s5");
    CHECK_THROWS_AS(build_instance(parse_description(j)), InputError);
  }
  SUBCASE("not json") { CHECK_THROWS_AS(parse_description_text("{"), InputError); }
}

TEST_CASE("alpha is detected as conjugation") {
  for (const auto& name : testutil::catalog()) {
    CAPTURE(name);
    Instance inst = testutil::load(name);
    REQUIRE(inst.conjugation_index.has_value());
    CHECK(inst.alpha_is_conjugation == (name != "FIX-REAL"));
  }
}

TEST_CASE("galois basics on FIX-E8") {
  Instance inst = testutil::load("FIX-E8");
  const Tower& t = *inst.tower;
  const FieldPtr& L = inst.field;
  CHECK(t.compose(idx(t, "s5"), idx(t, "s7")) == idx(t, "s3"));
  CHECK(t.compose(t.alpha_index(), t.alpha_index()) == idx(t, "id"));
  CHECK(apply(t.alpha(), xpow(L, 2)) == -xpow(L, 2));
  CHECK(validate_tower(t).ok());
  CHECK(fixed_field(t, {idx(t, "id")}).dimension() == 4);
  CHECK(fixed_field(t, {idx(t, "s5")}).dimension() == 2);
  CHECK(fixed_field(t, {idx(t, "s3"), idx(t, "s5")}).dimension() == 1);
  CHECK(condition_commute(t));

  Subfield L0 = fixed_field(t, {t.alpha_index()});
  CHECK(L0.dimension() == 2);
  const NFElem x = L->generator();
  CHECK(minimal_polynomial(x - x.pow(3)) == RatPoly({Rat(-2), Rat(0), Rat(1)}));
  CHECK(roots_in_subfield(RatPoly({Rat(-2), Rat(0), Rat(1)}), L0) == 2);
  CHECK(roots_in_subfield(RatPoly({Rat(1), Rat(0), Rat(1)}), L0) == 0);
  auto m = minimal_polynomial(x, L0);
  CHECK(m.size() == 3);
}

TEST_CASE("commuting condition on the catalog") {
  CHECK_FALSE(condition_commute(*testutil::load("FIX-S3").tower));
  CHECK_FALSE(commute_violations(*testutil::load("FIX-S3").tower).empty());
  CHECK_FALSE(condition_commute(*testutil::load("FIX-D4").tower));
  for (const char* name : {"FIX-TRIV", "FIX-E8", "FIX-REAL", "FIX-C16", "FIX-C24"})
    CHECK(condition_commute(*testutil::load(name).tower));
}

TEST_CASE("tower validation catches bad data") {
  AlgebraDescription d = load_description(testutil::fixture("FIX-E8"));
  SUBCASE("image not a root") {
    d.automorphisms[1].second = {Rat(1), Rat(1)};
    CHECK_FALSE(validate_tower(*build_instance(d).tower).find("automorphism_roots")->ok());
  }
  SUBCASE("alpha fixes sqrt(-d)") {
    d.alpha = "s5";
    CHECK_FALSE(validate_tower(*build_instance(d).tower).find("alpha")->ok());
  }
  SUBCASE("G not closed") {
    Instance inst = build_instance(d);
    const Tower& t = *inst.tower;
    Tower bad(t.field(), t.sqrt_md(), t.d(), t.autos(), {"id", "s3", "s5"}, "s7");
    CHECK_FALSE(validate_tower(bad).find("subgroup_G")->ok());
  }
}

TEST_CASE("roots of rational polynomials in L") {
  // Aut(L/Q) of a Galois field has [L:Q] elements; Q(2^(1/3)) has only one.
  CHECK(roots_in_field(testutil::load("FIX-E8").field, testutil::load("FIX-E8").field->min_poly()).size() == 4);
  CHECK(roots_in_field(testutil::load("FIX-S3").field, testutil::load("FIX-S3").field->min_poly()).size() == 6);
  CHECK(roots_in_field(testutil::load("FIX-D4").field, testutil::load("FIX-D4").field->min_poly()).size() == 8);
  CHECK(roots_in_field(testutil::load("FIX-C24").field, testutil::load("FIX-C24").field->min_poly()).size() == 8);
  FieldPtr cube = NumberField::create(RatPoly({Rat(-2), Rat(0), Rat(0), Rat(1)}));
  auto r = roots_in_field(cube, cube->min_poly());
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == cube->generator());
  // Repeated factors report their multiplicity.
  FieldPtr gi = NumberField::create(RatPoly({Rat(1), Rat(0), Rat(1)}));
  auto sq = roots_in_field(gi, RatPoly({Rat(1), Rat(0), Rat(2), Rat(0), Rat(1)}));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 2);
  // Each discovered root is a root, and they are distinct.
  Instance c16 = testutil::load("FIX-C16");
  auto roots = roots_in_field(c16.field, c16.field->min_poly());
  CHECK(roots.size() == 8);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CHECK(eval_at(c16.field->min_poly(), roots[i].first).is_zero());
    for (std::size_t j = 0; j < i; ++j) CHECK(roots[i].first != roots[j].first);
  }
}

TEST_CASE("automorphism counts") {
  auto e8 = lemma21_check(*testutil::load("FIX-E8").tower);
  CHECK(e8.passed());
  CHECK(e8.details["roots_of_m_in_L"] == 4);
  auto s3 = lemma21_check(*testutil::load("FIX-S3").tower);
  CHECK(s3.passed());
  CHECK(s3.details["roots_of_m_in_L"] == 6);
  CHECK(s3.details["constructed_distinct"] == 6);
  CHECK(lemma21_check(*testutil::load("FIX-C24").tower).passed());
}

TEST_CASE("crossed product on FIX-E8") {
  Instance inst = testutil::load("FIX-E8");
  REQUIRE(cocycle_validate(*inst.tower, inst.cocycle).ok());
  CHECK(cocycle_unitary(*inst.tower, inst.cocycle));
  AlgebraPtr B = testutil::algebra(inst);
  const FieldPtr& L = inst.field;
  const NFElem i = xpow(L, 2);
  AlgElem es = B->generator(1);
  CHECK(es * es == B->scalar(i));
  CHECK(es * B->scalar(L->generator()) == B->monomial(xpow(L, 5), 1));
  CHECK(es * B->scalar(L->generator()) == B->monomial(-L->generator(), 1));

  Matrix<NFElem> lam = regular_rep(es);
  CHECK(lam(0, 0).is_zero());
  CHECK(lam(0, 1) == i);
  CHECK(lam(1, 0).is_one());
  CHECK(lam(1, 1).is_zero());

  CHECK(reduced_trace(B->one()) == L->rational(Rat(2)));
  CHECK(reduced_trace(es).is_zero());
  CHECK(reduced_trace(B->scalar(L->generator())) == L->generator() + xpow(L, 5));
  CHECK(reduced_trace(B->scalar(i)) == Rat(2) * i);
  CHECK(inverse(es) == B->monomial(-i, 1));
  CHECK(inverse(es) * es == B->one());
  CHECK_FALSE(is_invertible(B->zero()));
  CHECK_THROWS_AS(inverse(B->zero()), NotInvertible);
}

TEST_CASE("crossed product algebra laws") {
  std::mt19937_64 rng(7);
  for (const char* name : {"FIX-E8", "FIX-E8-DIV", "FIX-S3", "FIX-C16", "FIX-C24", "FIX-D4"}) {
    CAPTURE(name);
    Instance inst = testutil::load(name);
    AlgebraPtr B = testutil::algebra(inst);
    for (int rep = 0; rep < 5; ++rep) {
      AlgElem a = testutil::random_alg(B, rng, 3), b = testutil::random_alg(B, rng, 3),
              c = testutil::random_alg(B, rng, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(regular_rep(a * b) == regular_rep(a) * regular_rep(b));
      CHECK(reduced_trace(a * b) == reduced_trace(b * a));
      CHECK(B->one() * a == a);
      CHECK(a * B->one() == a);
      // Right coordinates reassemble the element.
      auto rc = right_coordinates(a);
      AlgElem back = B->zero();
      for (std::size_t r = 0; r < B->n(); ++r) back += B->generator(r) * B->scalar(rc[r]);
      CHECK(back == a);
      CHECK(B->from_rational(B->to_rational(a)) == a);
    }
    AlgElem a = testutil::random_alg(B, rng, 3);
    if (is_invertible(a)) CHECK(a * inverse(a) == B->one());
  }
}

TEST_CASE("center of B is k") {
  for (const char* name : {"FIX-E8", "FIX-C24"}) {
    CAPTURE(name);
    Instance inst = testutil::load(name);
    AlgebraPtr B = testutil::algebra(inst);
    const std::size_t dim = B->dim_q();
    std::vector<AlgElem> gens = {B->scalar(inst.field->generator())};
    for (std::size_t s = 0; s < B->n(); ++s) gens.push_back(B->generator(s));
    Matrix<Rat> m(dim * gens.size(), dim, Rat(0));
    for (std::size_t j = 0; j < dim; ++j) {
      AlgElem e = B->basis(j);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto v = B->to_rational(e * gens[g] - gens[g] * e);
        for (std::size_t i = 0; i < dim; ++i) m(g * dim + i, j) = v[i];
      }
    }
    CHECK(kernel(m).size() == 2);
  }
}

TEST_CASE("cocycle normalization and validation") {
  Instance inst = testutil::load("FIX-E8");
  CocycleTable c(2, inst.field->rational(Rat(2)));
  auto rep = cocycle_validate(*inst.tower, c);
  CHECK(rep.ok());
  AlgebraPtr B = CrossedProduct::create(inst.tower, c);
  CHECK(B->rescaled());
  CHECK(B->rescale() == inst.field->rational(Rat(2)));
  CHECK(B->cocycle()(0, 0).is_one());
  CHECK(B->generator(0) == B->one());
  CHECK(B->generator(1) * B->generator(1) == B->one());

  CocycleTable bad = inst.cocycle;
  bad(0, 1) = inst.field->rational(Rat(3));
  auto r2 = cocycle_validate(*inst.tower, bad);
  CHECK_FALSE(r2.ok());
  CHECK_FALSE(r2.find("cocycle_identity")->witnesses.empty());

  CocycleTable zero = inst.cocycle;
  zero(1, 1) = inst.field->zero();
  CHECK_FALSE(cocycle_validate(*inst.tower, zero).ok());
  CHECK_THROWS_AS(CrossedProduct::create(inst.tower, zero), StructuralError);

  CHECK(cocycle_unitary(*testutil::load("FIX-E8-DIV").tower, testutil::load("FIX-E8-DIV").cocycle));
  CocycleTable nonunit = inst.cocycle;
  nonunit(1, 1) = Rat(2) * xpow(inst.field, 2);
  CHECK_FALSE(cocycle_unitary(*inst.tower, nonunit));
}

TEST_CASE("involution tau") {
  Instance inst = testutil::load("FIX-E8");
  AlgebraPtr B = testutil::algebra(inst);
  Involution tau = build_tau(B);
  const NFElem i = xpow(inst.field, 2);
  CHECK(tau(B->one()) == B->one());
  CHECK(tau(B->generator(1)) == B->monomial(-i, 1));
  std::mt19937_64 rng(11);
  NFElem y = testutil::random_elem(inst.field, rng, 5);
  CHECK(tau(B->scalar(y)) == B->scalar(apply(tau.alpha(), y)));
  CHECK(validate_involution(tau).ok());
  for (int rep = 0; rep < 5; ++rep) {
    AlgElem a = testutil::random_alg(B, rng, 3), b = testutil::random_alg(B, rng, 3);
    NFElem x = testutil::random_elem(inst.field, rng, 3);
    CHECK(tau(a * b) == tau(b) * tau(a));
    CHECK(tau(tau(a)) == a);
    CHECK(tau(x * a) == tau(a) * B->scalar(apply(tau.alpha(), x)));
  }
  // A map agreeing with tau on L and on the generators agrees everywhere.
  for (std::size_t j = 0; j < B->dim_q(); ++j) {
    AlgElem e = B->basis(j);
    const std::size_t s = j / inst.field->degree();
    AlgElem rebuilt = tau(B->generator(s)) * tau(B->scalar(e[s]));
    CHECK(tau(e) == rebuilt);
  }
}

TEST_CASE("involution axioms hold exactly when alpha commutes with G") {
  for (const auto& name : testutil::catalog()) {
    CAPTURE(name);
    Instance inst = testutil::load(name);
    Involution tau = build_tau(testutil::algebra(inst));
    Report rep = validate_involution(tau);
    CHECK(rep.ok() == condition_commute(*inst.tower));
    if (!rep.ok()) {
      const CheckResult* am = rep.find("anti_multiplicative");
      REQUIRE(am != nullptr);
      REQUIRE_FALSE(am->witnesses.empty());
      // The witness replays.
      const AlgebraPtr& B = tau.algebra_ptr();
      AlgElem a = B->basis(am->witnesses[0]["a_index"].get<std::size_t>());
      AlgElem b = B->basis(am->witnesses[0]["b_index"].get<std::size_t>());
      CHECK(tau(a * b) != tau(b) * tau(a));
    }
  }
}

TEST_CASE("symmetric and skew bases") {
  auto sizes = [](const char* name) {
    Involution tau = build_tau(testutil::algebra(testutil::load(name)));
    auto sym = symmetric_basis(tau);
    auto skew = skew_basis(tau);
    for (const auto& s : sym) CHECK(tau(s) == s);
    for (const auto& s : skew) CHECK(tau(s) == -s);
    return std::make_pair(sym.size(), skew.size());
  };
  CHECK(sizes("FIX-TRIV") == std::make_pair<std::size_t, std::size_t>(1, 1));
  CHECK(sizes("FIX-E8") == std::make_pair<std::size_t, std::size_t>(4, 4));
  CHECK(sizes("FIX-REAL") == std::make_pair<std::size_t, std::size_t>(1, 1));
  CHECK(sizes("FIX-C16") == std::make_pair<std::size_t, std::size_t>(16, 16));
}

TEST_CASE("unitary elements") {
  Instance inst = testutil::load("FIX-E8");
  AlgebraPtr B = testutil::algebra(inst);
  Involution tau = build_tau(B);
  CHECK(is_unitary_element(tau, B->one()));
  CHECK(is_unitary_element(tau, B->generator(1)));
  CHECK_FALSE(is_unitary_element(tau, Rat(2) * B->one()));

  CHECK(cayley(tau, B->zero()) == B->one());
  const NFElem i = xpow(inst.field, 2);
  CHECK(cayley(tau, B->scalar(i)) == B->scalar(-i));
  CHECK_THROWS_AS(cayley(tau, B->one()), DomainError);
  for (const auto& s : skew_basis(tau)) CHECK(is_unitary_element(tau, cayley(tau, s)));

  Instance triv = testutil::load("FIX-TRIV");
  Involution t1 = build_tau(testutil::algebra(triv));
  const NFElem xi = triv.field->generator();
  CHECK(cayley(t1, t1.algebra().scalar(xi)) == t1.algebra().scalar(-xi));
}

TEST_CASE("torsion unitaries") {
  auto tors = [](const char* name) {
    Involution tau = build_tau(testutil::algebra(testutil::load(name)));
    auto t = torsion_unitaries(tau);
    for (const auto& u : t) CHECK(is_unitary_element(tau, u));
    return t;
  };
  auto triv = tors("FIX-TRIV");
  CHECK(triv.size() == 4);
  auto e8 = tors("FIX-E8");
  CHECK(e8.size() == 8);
  const AlgebraPtr& B = e8[0].algebra();
  for (unsigned j = 0; j < 8; ++j)
    CHECK(std::find(e8.begin(), e8.end(), B->scalar(xpow(B->field(), j))) != e8.end());
  auto real = tors("FIX-REAL");
  REQUIRE(real.size() == 2);
  CHECK(real[0] == real[0].algebra()->one());
  CHECK(real[1] == -real[0].algebra()->one());
  CHECK(cyclotomic(12) == RatPoly({Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}));
}
