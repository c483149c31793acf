#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "posinv/embedding.hpp"
#include "posinv/errors.hpp"
#include "posinv/factor.hpp"
#include "posinv/linalg.hpp"
#include "posinv/number_field.hpp"
#include "posinv/rational.hpp"
#include "test_util.hpp"

using namespace posinv;

namespace {

FieldPtr q_zeta8() { return NumberField::create(RatPoly({1, 0, 0, 0, 1})); }

NFElem el(const FieldPtr& f, std::vector<Rat> c) { return f->element(std::move(c)); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rat(1, 2));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(to_string(testutil::q(-4, 6)) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
}

TEST_CASE("polynomial gcd, resultant, factorization") {
  RatPoly a({-1, 0, 1});  // X^2 - 1
  RatPoly b({1, 1});      // X + 1
  CHECK(gcd(a, b) == b);
  CHECK(resultant(a, RatPoly({-2, 1})) == 3);  // a(2)
  auto fs = factor_rational(RatPoly({-2, 0, 0, 1}) * RatPoly({1, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == RatPoly({1, 0, 1}));
  CHECK(fs[1].first == RatPoly({-2, 0, 0, 1}));
  CHECK(is_irreducible(RatPoly({1, 0, 0, 0, 1})));
  CHECK_FALSE(is_irreducible(RatPoly({4, 0, 0, 0, 1})));  // (x^2+2x+2)(x^2-2x+2)
  CHECK(is_irreducible(RatPoly({31, 36, 27, -4, 9, 0, 1})));
  CHECK_THROWS_AS(NumberField::create(RatPoly({-1, 0, 1})), InputError);
}

TEST_CASE("nf_add and nf_mul") {
  auto f = q_zeta8();
  NFElem x = f->generator();
  NFElem a = el(f, {0, 1, 2, 3});
  CHECK(f->zero() + a == a);
  CHECK((a + (-a)).is_zero());
  CHECK(x + x.pow(3) == el(f, {0, 1, 0, 1}));
  CHECK(x.pow(2) * x.pow(2) == f->rational(-1));
  CHECK(f->one() * a == a);
  CHECK((x + x.pow(3)) * (x - x.pow(3)) == el(f, {0, 0, 2, 0}));
}

TEST_CASE("nf_inv") {
  auto f = q_zeta8();
  CHECK(f->one().inverse() == f->one());
  CHECK(f->generator().inverse() == el(f, {0, 0, 0, -1}));
  CHECK_THROWS_AS(f->zero().inverse(), DivisionByZero);
}

TEST_CASE("mismatched fields are rejected") {
  auto f = q_zeta8();
  auto g = NumberField::create(RatPoly({-2, 0, 1}));
  CHECK_THROWS_AS(f->generator() + g->generator(), StructuralError);
  CHECK_THROWS_AS(f->generator() * g->generator(), StructuralError);
}

TEST_CASE("mul agrees with schoolbook multiplication and naive reduction") {
  std::mt19937_64 rng(7);
  for (const RatPoly& m : {RatPoly({1, 0, 0, 0, 1}), RatPoly({31, 36, 27, -4, 9, 0, 1}), RatPoly({1, 0, 0, 0, -1, 0, 0, 0, 1})}) {
    auto f = NumberField::create(m);
    for (int t = 0; t < 200; ++t) {
      NFElem a = testutil::random_elem(f, rng, 5);
      NFElem b = testutil::random_elem(f, rng, 5);
      CHECK(a * b == f->element(testutil::naive_mulmod(a.coeffs(), b.coeffs(), m.coeffs())));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  auto f = NumberField::create(RatPoly({31, 36, 27, -4, 9, 0, 1}));
  for (int t = 0; t < 50; ++t) {
    NFElem a = testutil::random_elem(f, rng, 9);
    NFElem b = testutil::random_elem(f, rng, 9);
    NFElem c = testutil::random_elem(f, rng, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
  }
}

TEST_CASE("embed") {
  auto f = q_zeta8();
  auto ctx = EmbeddingContext::create(f, {0.7L, 0.7L});
  ComplexBox c = embed(f->rational(Rat(3, 2)), ctx);
  CHECK(c.re.lo == Rat(3, 2));
  CHECK(c.re.hi == Rat(3, 2));
  const long double h = std::sqrt(2.0L) / 2;
  ComplexBox g = embed(f->generator(), ctx);
  CHECK(std::fabs(g.re.mid().get_d() - static_cast<double>(h)) < 1e-15);
  CHECK(std::fabs(g.im.mid().get_d() - static_cast<double>(h)) < 1e-15);
  CHECK(g.width() < Rat(1, 1u << 30));
  ComplexBox i = embed(f->basis(2), ctx);
  CHECK(i.re.contains(0));
  CHECK(i.im.contains(1));
  CHECK(embed(f->generator(), ctx.with_precision(512)).width() < g.width());
}

TEST_CASE("embed is a ring homomorphism within interval widths") {
  std::mt19937_64 rng(3);
  auto f = NumberField::create(RatPoly({31, 36, 27, -4, 9, 0, 1}));
  auto ctx = EmbeddingContext::create(f, {1.2599L, 1.7321L});
  for (int t = 0; t < 100; ++t) {
    NFElem a = testutil::random_elem(f, rng, 6);
    NFElem b = testutil::random_elem(f, rng, 6);
    CHECK(embed(a * b, ctx).overlaps(embed(a, ctx) * embed(b, ctx)));
    CHECK(embed(a + b, ctx).overlaps(embed(a, ctx) + embed(b, ctx)));
  }
}

TEST_CASE("embed matches a long double evaluation oracle") {
  auto f = NumberField::create(RatPoly({31, 36, 27, -4, 9, 0, 1}));
  auto ctx = EmbeddingContext::create(f, {1.2599L, 1.7321L});
  const std::complex<long double> theta(std::cbrt(2.0L), std::sqrt(3.0L));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    NFElem a = testutil::random_elem(f, rng, 4);
    std::complex<long double> v = 0;
    for (std::size_t k = a.coeffs().size(); k-- > 0;) v = v * theta + static_cast<long double>(a[k].get_d());
    ComplexBox b = embed(a, ctx);
    CHECK(std::fabs(b.re.mid().get_d() - static_cast<double>(v.real())) < 1e-9 * (1 + std::abs(v)));
    CHECK(std::fabs(b.im.mid().get_d() - static_cast<double>(v.imag())) < 1e-9 * (1 + std::abs(v)));
  }
}

TEST_CASE("sign_of") {
  auto f = q_zeta8();
  auto ctx = EmbeddingContext::create(f, {0.7L, 0.7L}).with_conjugation(el(f, {0, 0, 0, -1}));
  CHECK(sign_of(f->zero(), ctx) == SignVal::kZero);
  CHECK(sign_of(f->rational(Rat(-7, 3)), ctx) == SignVal::kNeg);
  CHECK(sign_of(el(f, {0, 1, 0, -1}), ctx) == SignVal::kPos);   // x - x^3 = sqrt 2
  CHECK(sign_of(el(f, {0, -1, 0, 1}), ctx) == SignVal::kNeg);
  CHECK(sign_of(el(f, {-141, 100, 0, -100}), ctx) == SignVal::kPos);  // 100 sqrt2 - 141
  CHECK_THROWS_AS(sign_of(f->generator(), ctx), DomainError);
  auto no_conj = EmbeddingContext::create(f, {0.7L, 0.7L});
  CHECK_THROWS_AS(sign_of(el(f, {0, 1, 0, -1}), no_conj), DomainError);
}

TEST_CASE("sign_of exhausts precision on a tiny positive number") {
  // a = (sqrt2 - 1)^60 is about 1e-23 and needs more than 64 bits to separate.
  auto f = q_zeta8();
  auto ctx = EmbeddingContext::create(f, {0.7L, 0.7L}, 16, 32).with_conjugation(el(f, {0, 0, 0, -1}));
  NFElem a = el(f, {-1, 1, 0, -1}).pow(60);
  CHECK_THROWS_AS(sign_of(a, ctx), PrecisionExhausted);
  auto wide = EmbeddingContext::create(f, {0.7L, 0.7L}, 16, 4096).with_conjugation(el(f, {0, 0, 0, -1}));
  CHECK(sign_of(a, wide) == SignVal::kPos);
}

TEST_CASE("verify_alpha_is_conjugation") {
  auto f = q_zeta8();
  auto ctx = EmbeddingContext::create(f, {0.7L, 0.7L});
  CHECK(verify_alpha_is_conjugation(el(f, {0, 0, 0, -1}), ctx));  // x^7
  CHECK_FALSE(verify_alpha_is_conjugation(el(f, {0, -1, 0, 0}), ctx));  // x^5
  auto r = NumberField::create(RatPoly({-2, 0, 1}));
  auto rctx = EmbeddingContext::create(r, {1.41L, 0.0L});
  CHECK(verify_alpha_is_conjugation(r->generator(), rctx));
  CHECK_FALSE(verify_alpha_is_conjugation(-r->generator(), rctx));
}

TEST_CASE("exact linear algebra") {
  Matrix<Rat> m(3, 3, Rat(0));
  int v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  CHECK(determinant(m) == 18);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix<Rat>::identity(3, Rat(0)));
  auto cp = charpoly(m);
  // det(tI - m) at t = 5 by direct determinant
  Matrix<Rat> t5 = Matrix<Rat>::identity(3, Rat(0));
  for (int i = 0; i < 3; ++i) t5(i, i) = 5;
  Rat val = 0;
  for (std::size_t k = cp.size(); k-- > 0;) val = val * 5 + cp[k];
  CHECK(val == determinant(t5 - m));
  Matrix<Rat> s(2, 3, Rat(0));
  s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3;
  s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
  CHECK(kernel(s).size() == 2);
}

TEST_CASE("charpoly agrees with det(tI - M) on random matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    Matrix<Rat> m(n, n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = testutil::q(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 3));
    if (trial % 3 == 0)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 0;
    auto cp = charpoly(m);
    REQUIRE(cp.size() == n + 1);
    for (int t = -2; t <= 2; ++t) {
      Matrix<Rat> tm = Matrix<Rat>::identity(n, Rat(0));
      for (std::size_t i = 0; i < n; ++i) tm(i, i) = t;
      Rat val = 0;
      for (std::size_t k = cp.size(); k-- > 0;) val = val * t + cp[k];
      CHECK(val == determinant(tm - m));
    }
  }
}
