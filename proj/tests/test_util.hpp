#pragma once

#include <random>
#include <string>
#include <vector>

#include "posinv/crossed_product.hpp"
#include "posinv/description.hpp"
#include "posinv/number_field.hpp"
#include "posinv/rational.hpp"

namespace testutil {

inline posinv::Rat q(long num, long den) {
  posinv::Rat r(num, den);
  r.canonicalize();
  return r;
}

inline posinv::Rat random_rat(std::mt19937_64& rng, int h) {
  long num = static_cast<long>(rng() % (2 * h + 1)) - h;
  long den = 1 + static_cast<long>(rng() % h);
  return q(num, den);
}

inline posinv::NFElem random_elem(const posinv::FieldPtr& f, std::mt19937_64& rng, int h) {
  std::vector<posinv::Rat> c(f->degree());
  for (auto& q : c) q = random_rat(rng, h);
  return f->element(c);
}

// Schoolbook product followed by reduction with x^N = -(m_0 + ... + m_{N-1} x^{N-1}),
// one leading term at a time.
inline std::vector<posinv::Rat> naive_mulmod(const std::vector<posinv::Rat>& a, const std::vector<posinv::Rat>& b,
                                             const std::vector<posinv::Rat>& m) {
  const std::size_t n = m.size() - 1;
  std::vector<posinv::Rat> p(a.size() + b.size(), posinv::Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  for (std::size_t k = p.size(); k-- > n;) {
    posinv::Rat c = p[k];
    if (c == 0) continue;
    p[k] = 0;
    for (std::size_t j = 0; j < n; ++j) p[k - n + j] -= c * m[j];
  }
  p.resize(n);
  return p;
}

inline std::string fixture(const std::string& name) { return std::string(POSINV_FIXTURE_DIR) + "/" + name + ".json"; }

inline posinv::Instance load(const std::string& name) {
  return posinv::build_instance(posinv::load_description(fixture(name)));
}

inline posinv::AlgebraPtr algebra(const posinv::Instance& inst) {
  return posinv::CrossedProduct::create(inst.tower, inst.cocycle);
}

inline posinv::AlgElem random_alg(const posinv::AlgebraPtr& b, std::mt19937_64& rng, int h) {
  std::vector<posinv::NFElem> c;
  for (std::size_t s = 0; s < b->n(); ++s) c.push_back(random_elem(b->field(), rng, h));
  return posinv::AlgElem(b, c);
}

inline const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names = {"FIX-TRIV", "FIX-E8", "FIX-E8-DIV", "FIX-REAL",
                                                 "FIX-S3",   "FIX-D4", "FIX-C16",    "FIX-C24",
                                                 "FIX-C16-DIV"};
  return names;
}

}  // namespace testutil
