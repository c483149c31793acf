// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "posinv/cli.hpp"
#include "posinv/codebook.hpp"
#include "posinv/errors.hpp"
#include "posinv/positivity.hpp"
#include "test_util.hpp"

using namespace posinv;

namespace {

struct Built {
  Instance inst;
  Involution tau;
};

Built built(const std::string& name) {
  Instance inst = testutil::load(name);
  Involution tau = build_tau(testutil::algebra(inst));
  return Built{std::move(inst), std::move(tau)};
}

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool finish() const {
    std::cout << "criterion " << id_ << ": " << (ok_ ? "PASS" : "FAIL");
    for (const auto& n : notes_) std::cout << " | " << n;
    std::cout << '\n';
    for (const auto& f : failures_) std::cout << "    failed: " << f << '\n';
    std::cout.flush();
    return ok_;
  }

 private:
  int id_;
  bool ok_ = true;
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// (x e_s)(y e_r) = x s(y) xi(s,r) e_sr with field products done by schoolbook reduction.
AlgElem naive_alg_mul(const AlgElem& a, const AlgElem& b) {
  const CrossedProduct& B = *a.algebra();
  const FieldPtr& L = B.field();
  const auto m = L->min_poly().coeffs();
  auto mul = [&](const NFElem& x, const NFElem& y) { return L->element(testutil::naive_mulmod(x.coeffs(), y.coeffs(), m)); };
  std::vector<NFElem> out(B.n(), L->zero());
  for (std::size_t s = 0; s < B.n(); ++s)
    for (std::size_t r = 0; r < B.n(); ++r) {
      NFElem t = mul(mul(a[s], B.sigma(s)(b[r])), B.cocycle()(s, r));
      out[B.product(s, r)] = out[B.product(s, r)] + t;
    }
  return AlgElem(a.algebra(), out);
}

bool c1() {
  Criterion c(1);
  for (const char* name : {"FIX-TRIV", "FIX-E8", "FIX-C16", "FIX-C24", "FIX-C16-DIV"}) {
    Stopwatch sw;
    auto b = built(name);
    Report rep = validate_involution(b.tau);
    double t = sw.seconds();
    c.require(rep.ok(), std::string(name) + " axioms");
    c.require(rep.checks.size() == 4, std::string(name) + " four axioms checked");
    c.require(t < 10, std::string(name) + " runtime " + fmt(t));
    c.note(std::string(name) + " " + fmt(t));
  }
  return c.finish();
}

bool c2() {
  Criterion c(2);
  std::size_t fixtures = 0, cond_fails = 0, d_negative = 0, violations = 0;
  for (const auto& name : testutil::catalog()) {
    auto b = built(name);
    ++fixtures;
    if (!condition_commute(*b.inst.tower)) ++cond_fails;
    if (sign_of(b.inst.tower->d(), b.inst.ctx) == SignVal::kNeg) ++d_negative;
    CheckResult iff = iff_check(b.inst.tower, b.inst.cocycle, b.inst.ctx);
    if (!iff.ok()) {
      ++violations;
      c.require(false, name + " iff violated");
    }
  }
  c.require(fixtures >= 6, "at least 6 fixtures");
  c.require(cond_fails >= 2, "at least 2 fixtures failing the commuting condition");
  c.require(d_negative >= 1, "at least 1 fixture with d < 0");
  auto s3 = built("FIX-S3");
  Report rep = validate_involution(s3.tau);
  const CheckResult* am = rep.find("anti_multiplicative");
  bool witnessed = am && !am->passed() && !am->witnesses.empty();
  if (witnessed) {
    const AlgebraPtr& B = s3.tau.algebra_ptr();
    AlgElem a = B->basis(am->witnesses[0]["a_index"].get<std::size_t>());
    AlgElem bb = B->basis(am->witnesses[0]["b_index"].get<std::size_t>());
    witnessed = s3.tau(a * bb) != s3.tau(bb) * s3.tau(a);
    c.note("FIX-S3 witness a=" + a.to_string() + " b=" + bb.to_string());
  }
  c.require(witnessed, "FIX-S3 anti-multiplicativity witness");
  c.note(std::to_string(fixtures) + " fixtures, " + std::to_string(cond_fails) + " failing the condition, " +
         std::to_string(d_negative) + " with d<0, " + std::to_string(violations) + " violations");
  return c.finish();
}

bool c3() {
  Criterion c(3);
  std::size_t compared = 0;
  for (const auto& name : testutil::catalog()) {
    auto b = built(name);
    if (!validate_involution(b.tau).ok()) continue;
    Stopwatch sw;
    Definiteness tf = definiteness(trace_form_gram(b.tau), b.inst.ctx);
    double t = sw.seconds();
    TransportSignature ts = transport_definiteness(transport_hermitian(b.tau), b.inst.ctx);
    ++compared;
    c.require(tf == ts.implied_trace_form,
              name + " trace form " + to_string(tf) + " vs transport " + to_string(ts.implied_trace_form));
    if (name == "FIX-E8") {
      c.require(tf == Definiteness{DefKind::kPosDef, 8, 0}, "FIX-E8 POS_DEF (8,0), got " + to_string(tf));
      c.require(t < 30, "FIX-E8 runtime " + fmt(t));
      c.note("FIX-E8 " + to_string(tf) + " in " + fmt(t));
    }
  }
  c.note(std::to_string(compared) + " validated fixtures compared");
  return c.finish();
}

bool c4() {
  Criterion c(4);
  auto b = built("FIX-REAL");
  bool pos = is_positive(b.tau, b.inst.ctx);
  Definiteness d = definiteness(trace_form_gram(b.tau), b.inst.ctx);
  c.require(!pos, "is_positive false");
  c.require(d.p == 1 && d.q == 1, "signature (1,1), got " + to_string(d));
  c.note("is_positive=" + std::string(pos ? "true" : "false") + " " + to_string(d));
  return c.finish();
}

bool c5() {
  Criterion c(5);
  std::size_t positive = 0;
  for (const auto& name : testutil::catalog()) {
    auto b = built(name);
    if (!validate_involution(b.tau).ok() || !is_positive(b.tau, b.inst.ctx)) continue;
    ++positive;
    CheckResult p23 = prop23_check(b.tau, b.inst.ctx);
    CheckResult c24 = cor24_check(b.tau, b.inst.ctx);
    c.require(p23.passed(), name + " minimal polynomial splits in L0");
    c.require(c24.passed(), name + " alpha central in Aut(L/Q)");
  }
  c.require(positive > 0, "some positive fixture");
  c.note(std::to_string(positive) + " positive fixtures");
  return c.finish();
}

bool c6() {
  Criterion c(6);
  for (const auto& name : testutil::catalog()) {
    Instance inst = testutil::load(name);
    CheckResult r = lemma21_check(*inst.tower);
    if (r.status == Status::kNotApplicable) continue;
    c.require(r.passed(), name + " automorphism count");
    if (name == "FIX-E8" || name == "FIX-S3") {
      std::size_t deg = inst.field->degree();
      std::size_t found = r.details["roots_of_m_in_L"].get<std::size_t>();
      c.require(found == deg, name + " count");
      c.note(name + " " + std::to_string(found) + " = " + std::to_string(deg));
    }
  }
  return c.finish();
}

bool c7() {
  Criterion c(7);
  auto run = [&](const std::string& name, bool required) {
    Stopwatch sw;
    auto b = built(name);
    Codebook cb = generate(b.tau, {Strategy::kProducts, 64, 8, 0});
    bool unitary = true;
    for (const auto& u : cb.codewords) unitary = unitary && is_unitary_element(b.tau, u);
    auto mats = to_matrices(cb, b.inst.ctx);
    Rat worst = 0;
    bool mats_ok = true;
    for (const auto& m : mats) {
      worst = std::max(worst, m.residual.hi);
      mats_ok = mats_ok && m.unitary;
    }
    bool residual_ok = worst < Rat(1) / Rat(Integer("1000000000000"));
    DiversityReport div = diversity(cb, b.inst.ctx);
    double t = sw.seconds();
    std::ostringstream s;
    s << name << " size " << cb.codewords.size() << ", singular pairs " << div.singular_pairs.size() << "/"
      << div.pairs << ", residual < " << worst.get_d();
    if (div.diversity_product) s << ", diversity product " << div.diversity_product->lo.get_d();
    s << ", " << fmt(t);
    c.note(s.str());
    if (!required) return;
    c.require(unitary, name + " tau(u)u = 1 for every codeword");
    c.require(mats_ok && residual_ok, name + " matrices unitary within 1e-12");
    c.require(div.fully_diverse, name + " full diversity (" + std::to_string(div.singular_pairs.size()) +
                                     " singular differences; B is split, so E8 products contain zero divisors)");
    c.require(t < 60, name + " runtime " + fmt(t));
  };
  run("FIX-E8", true);
  run("FIX-E8-DIV", false);
  run("FIX-C16-DIV", false);
  return c.finish();
}

bool c8() {
  Criterion c(8);
  std::size_t field_pairs = 0, alg_pairs = 0, embed_pairs = 0;
  std::mt19937_64 rng(2024);
  for (const auto& name : testutil::catalog()) {
    Instance inst = testutil::load(name);
    const FieldPtr& L = inst.field;
    const auto m = L->min_poly().coeffs();
    bool ok = true, hom = true;
    for (int t = 0; t < 1000; ++t) {
      NFElem a = testutil::random_elem(L, rng, 9), b = testutil::random_elem(L, rng, 9);
      ok = ok && a * b == L->element(testutil::naive_mulmod(a.coeffs(), b.coeffs(), m));
      ComplexBox ea = embed(a, inst.ctx), eb = embed(b, inst.ctx);
      hom = hom && embed(a * b, inst.ctx).overlaps(ea * eb) && embed(a + b, inst.ctx).overlaps(ea + eb);
      ++field_pairs;
      ++embed_pairs;
    }
    c.require(ok, name + " field mul vs schoolbook oracle");
    c.require(hom, name + " embed homomorphism");
    AlgebraPtr B = testutil::algebra(inst);
    bool alg = true;
    for (int t = 0; t < 1000; ++t) {
      AlgElem a = testutil::random_alg(B, rng, 5), b = testutil::random_alg(B, rng, 5);
      alg = alg && a * b == naive_alg_mul(a, b);
      ++alg_pairs;
    }
    c.require(alg, name + " algebra mul vs oracle");
  }
  c.note(std::to_string(field_pairs) + " field pairs, " + std::to_string(alg_pairs) + " algebra pairs, " +
         std::to_string(embed_pairs) + " embedding pairs");
  return c.finish();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

bool c9() {
  Criterion c(9);
  auto dir = std::filesystem::temp_directory_path() / ("posinv_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  struct Case {
    std::string fixture, strategy, size, seed;
  };
  for (const Case& k : {Case{"FIX-E8", "products", "64", "0"}, Case{"FIX-E8-DIV", "cayley", "16", "11"},
                        Case{"FIX-C24", "mixed", "12", "3"}}) {
    std::vector<std::string> outs;
    for (int run = 0; run < 2; ++run) {
      auto json = dir / ("run" + std::to_string(run) + ".json");
      auto csv = dir / ("run" + std::to_string(run) + ".csv");
      std::ostringstream out, err;
      int code = run_cli({"codebook", testutil::fixture(k.fixture), "--strategy", k.strategy, "--size", k.size,
                          "--seed", k.seed, "--out", json.string(), "--csv", csv.string()},
                         out, err);
      c.require(code == kExitPass || code == kExitFail, k.fixture + " exit code " + std::to_string(code));
      outs.push_back(slurp(json) + "\x1f" + slurp(csv));
    }
    c.require(!outs[0].empty() && outs[0] == outs[1], k.fixture + " " + k.strategy + " byte-identical");
    c.note(k.fixture + " " + k.strategy + " " + std::to_string(outs[0].size()) + " bytes");
  }
  std::filesystem::remove_all(dir);
  return c.finish();
}

}  // namespace

int main() {
  bool all = true;
  for (auto f : {c1, c2, c3, c4, c5, c6, c7, c8, c9}) {
    try {
      all = f() && all;
    } catch (const std::exception& e) {
      std::cout << "criterion raised: " << e.what() << '\n';
      all = false;
    }
  }
  std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << '\n';
  return all ? 0 : 1;
}
