#include "posinv/codebook.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "posinv/errors.hpp"

namespace posinv {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::kProducts:
      return "products";
    case Strategy::kCayley:
      return "cayley";
    case Strategy::kMixed:
      return "mixed";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "products") return Strategy::kProducts;
  if (s == "cayley") return Strategy::kCayley;
  if (s == "mixed") return Strategy::kMixed;
  throw InputError("unknown strategy '" + s + "' (products, cayley, mixed)");
}

namespace {

bool push_unique(std::vector<AlgElem>& out, const AlgElem& u) {
  if (std::find(out.begin(), out.end(), u) != out.end()) return false;
  out.push_back(u);
  return true;
}

void add_products(const Involution& tau, std::size_t limit, std::vector<AlgElem>& out) {
  const CrossedProduct& B = tau.algebra();
  std::vector<AlgElem> seeds;
  for (std::size_t s = 0; s < B.n(); ++s) push_unique(seeds, B.generator(s));
  for (const auto& z : torsion_unitaries(tau)) push_unique(seeds, z);
  std::deque<AlgElem> queue;
  if (out.size() < limit && push_unique(out, B.one())) queue.push_back(B.one());
  if (queue.empty()) queue.push_back(B.one());
  while (!queue.empty() && out.size() < limit) {
    AlgElem w = queue.front();
    queue.pop_front();
    for (const auto& g : seeds) {
      if (out.size() >= limit) break;
      AlgElem v = w * g;
      if (push_unique(out, v)) queue.push_back(v);
    }
  }
}

void add_cayley(const Involution& tau, const CodebookParams& p, std::size_t limit, std::vector<AlgElem>& out) {
  const CrossedProduct& B = tau.algebra();
  auto skew = skew_basis(tau);
  std::mt19937_64 rng(p.seed);
  const std::uint64_t h = static_cast<std::uint64_t>(p.height_bound);
  auto coefficient = [&]() {
    const long num = static_cast<long>(rng() % (2 * h + 1)) - static_cast<long>(h);
    const long den = 1 + static_cast<long>(rng() % h);
    Rat r(num, den);
    r.canonicalize();
    return r;
  };
  push_unique(out, cayley(tau, B.zero()));
  const std::size_t max_attempts = 64 * limit + 64;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < limit; ++attempt) {
    AlgElem s = B.zero();
    for (const auto& b : skew) s += coefficient() * b;
    try {
      push_unique(out, cayley(tau, s));
    } catch (const NotInvertible&) {
    }
  }
}

}  // namespace

Codebook generate(const Involution& tau, const CodebookParams& params) {
  if (params.size_limit < 2) throw InputError("codebook size limit must be at least 2");
  if (params.height_bound < 1) throw InputError("height bound must be at least 1");
  Codebook cb{tau.algebra_ptr(), {}, params};
  switch (params.strategy) {
    case Strategy::kProducts:
      add_products(tau, params.size_limit, cb.codewords);
      break;
    case Strategy::kCayley:
      add_cayley(tau, params, params.size_limit, cb.codewords);
      break;
    case Strategy::kMixed:
      add_products(tau, std::max<std::size_t>(1, params.size_limit / 2), cb.codewords);
      add_cayley(tau, params, params.size_limit, cb.codewords);
      break;
  }
  for (const auto& u : cb.codewords)
    if (!is_unitary_element(tau, u)) throw InternalConsistencyError("generated codeword is not unitary: " + u.to_string());
  return cb;
}

RealInterval nth_root(const RealInterval& x, unsigned k, unsigned bits) {
  if (x.lo < 0) throw DomainError("nth_root of an interval with negative part");
  if (k == 0) throw DomainError("nth_root with k = 0");
  auto root = [&](const Rat& v, bool up) {
    // v * 2^(k bits), rounded in the requested direction, then an integer root.
    Integer scale = 1;
    scale <<= static_cast<mp_bitcnt_t>(k) * bits;
    Rat sv = v * Rat(scale);
    Integer n;
    if (up)
      mpz_cdiv_q(n.get_mpz_t(), sv.get_num().get_mpz_t(), sv.get_den().get_mpz_t());
    else
      mpz_fdiv_q(n.get_mpz_t(), sv.get_num().get_mpz_t(), sv.get_den().get_mpz_t());
    Integer r;
    const bool exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0;
    if (up && !exact) r += 1;
    Integer den = 1;
    den <<= bits;
    Rat out(r, den);
    out.canonicalize();
    return out;
  };
  return {root(x.lo, false), root(x.hi, true)};
}

DiversityReport diversity(const Codebook& cb, const EmbeddingContext& ctx) {
  if (cb.codewords.size() < 2) throw InputError("diversity needs at least two codewords");
  const std::size_t n = cb.algebra->n();
  const unsigned bits = ctx.precision_bits();
  DiversityReport rep;
  rep.precision_bits = bits;
  std::vector<Matrix<NFElem>> lam;
  for (const auto& u : cb.codewords) lam.push_back(regular_rep(u));
  std::optional<RealInterval> best;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (std::size_t j = i + 1; j < lam.size(); ++j) {
      ++rep.pairs;
      NFElem det = determinant(lam[i] - lam[j]);
      if (det.is_zero()) {
        rep.singular_pairs.emplace_back(i, j);
        continue;
      }
      RealInterval v = nth_root(embed(det, ctx).norm_sq().round_out(bits), static_cast<unsigned>(2 * n), bits);
      if (!best) {
        best = v;
      } else {
        best = RealInterval(std::min(best->lo, v.lo), std::min(best->hi, v.hi));
      }
    }
  rep.fully_diverse = rep.singular_pairs.empty();
  if (rep.fully_diverse) rep.diversity_product = best;
  return rep;
}

namespace {

ComplexMatrix embed_matrix(const Matrix<NFElem>& m, const EmbeddingContext& ctx) {
  const std::size_t n = m.rows();
  const unsigned bits = ctx.precision_bits();
  ComplexMatrix out;
  out.n = n;
  out.precision_bits = bits;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.entries.push_back(embed(m(i, j), ctx));
  Rat lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ComplexBox acc = ComplexBox::point(i == j ? Rat(-1) : Rat(0));
      for (std::size_t k = 0; k < n; ++k)
        acc = acc + (out.entries[k * n + i].conj() * out.entries[k * n + j]).round_out(bits + 16);
      const Rat mag = std::max(acc.re.mag(), acc.im.mag());
      const Rat mig = std::max(acc.re.mig(), acc.im.mig());
      hi = std::max(hi, mag);
      lo = std::max(lo, mig);
    }
  out.residual = RealInterval(lo, hi);
  return out;
}

}  // namespace

std::vector<ComplexMatrix> to_matrices(const Codebook& cb, const EmbeddingContext& ctx) {
  std::vector<ComplexMatrix> out;
  for (const auto& u : cb.codewords) {
    const Matrix<NFElem> lam = regular_rep(u);
    for (unsigned bits = ctx.precision_bits();; bits *= 2) {
      EmbeddingContext c = bits == ctx.precision_bits() ? ctx : ctx.with_precision(bits);
      ComplexMatrix m = embed_matrix(lam, c);
      Rat threshold(1);
      threshold /= Rat(Integer(1) << (ctx.precision_bits() / 2));
      if (m.residual.hi < threshold) {
        m.unitary = true;
        out.push_back(std::move(m));
        break;
      }
      if (m.residual.lo >= threshold) {
        out.push_back(std::move(m));
        break;
      }
      if (bits * 2 > ctx.max_precision_bits())
        throw PrecisionExhausted("unitarity residual undecided within " + std::to_string(ctx.max_precision_bits()) +
                                 " bits");
    }
  }
  return out;
}

namespace {

int digits_for(unsigned bits) { return std::max(17, static_cast<int>(bits * 30103 / 100000)); }

Json box_json(const ComplexBox& b, int digits) {
  return Json::array({to_decimal(b.re.mid(), digits), to_decimal(b.im.mid(), digits)});
}

}  // namespace

Json export_json(const Codebook& cb, const std::vector<ComplexMatrix>& mats, const DiversityReport& div,
                 const EmbeddingContext& ctx, const std::string& field_name) {
  const int digits = digits_for(ctx.precision_bits());
  const CrossedProduct& B = *cb.algebra;
  Json j = Json::object();
  j["n"] = B.n();
  Json fd = Json::object();
  if (!field_name.empty()) fd["name"] = field_name;
  Json mp = Json::array();
  for (const auto& c : B.field()->min_poly().coeffs()) mp.push_back(to_string(c));
  fd["min_poly"] = mp;
  fd["generator_embedding"] = box_json(ctx.root_box(), digits);
  Json group = Json::array();
  for (std::size_t s = 0; s < B.n(); ++s) group.push_back(B.sigma(s).name);
  fd["group_G"] = group;
  fd["alpha"] = B.tower().alpha().name;
  j["field_description"] = fd;
  Json words = Json::array();
  for (const auto& m : mats) {
    Json w = Json::array();
    for (const auto& e : m.entries) w.push_back(box_json(e, digits));
    words.push_back(w);
  }
  j["codewords"] = words;
  Json exact = Json::array();
  for (const auto& u : cb.codewords) exact.push_back(u.to_json());
  j["codewords_exact"] = exact;
  Json d = Json::object();
  d["fully_diverse"] = div.fully_diverse;
  d["pairs"] = div.pairs;
  Json sp = Json::array();
  for (const auto& [a, b] : div.singular_pairs) sp.push_back({a, b});
  d["singular_pairs"] = sp;
  if (div.diversity_product)
    d["diversity_product"] = {to_decimal(div.diversity_product->lo, digits),
                              to_decimal(div.diversity_product->hi, digits)};
  j["diversity"] = d;
  j["metadata"] = {{"strategy", to_string(cb.params.strategy)},
                   {"seed", cb.params.seed},
                   {"size_limit", cb.params.size_limit},
                   {"height_bound", cb.params.height_bound},
                   {"size", cb.codewords.size()},
                   {"normalization", "lambda, no 1/sqrt(n) scaling"},
                   {"precision_bits", ctx.precision_bits()},
                   {"decimal_digits", digits}};
  return j;
}

std::string export_csv(const std::vector<ComplexMatrix>& mats, const EmbeddingContext& ctx) {
  const int digits = digits_for(ctx.precision_bits());
  std::ostringstream out;
  out << "index";
  const std::size_t n = mats.empty() ? 0 : mats[0].n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out << ",re_" << i << j << ",im_" << i << j;
  out << "\n";
  for (std::size_t k = 0; k < mats.size(); ++k) {
    out << k;
    for (const auto& e : mats[k].entries) out << "," << to_decimal(e.re.mid(), digits) << "," << to_decimal(e.im.mid(), digits);
    out << "\n";
  }
  return out.str();
}

std::vector<AlgElem> load_codewords(const Json& j, const AlgebraPtr& algebra) {
  if (!j.contains("codewords_exact") || !j.at("codewords_exact").is_array())
    throw InputError("codebook export has no codewords_exact array");
  std::vector<AlgElem> out;
  for (const auto& w : j.at("codewords_exact")) {
    std::vector<NFElem> coeffs;
    for (std::size_t s = 0; s < algebra->n(); ++s) {
      const std::string& name = algebra->sigma(s).name;
      if (!w.contains(name)) throw InputError("codeword misses coefficient of e_" + name);
      coeffs.push_back(parse_element(algebra->field(), w.at(name).get<std::vector<std::string>>()));
    }
    out.emplace_back(algebra, std::move(coeffs));
  }
  return out;
}

}  // namespace posinv
