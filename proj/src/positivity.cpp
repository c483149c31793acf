#include "posinv/positivity.hpp"

#include "posinv/errors.hpp"

namespace posinv {

const char* to_string(DefKind k) {
  switch (k) {
    case DefKind::kPosDef:
      return "POS_DEF";
    case DefKind::kNegDef:
      return "NEG_DEF";
    case DefKind::kIndefinite:
      return "INDEFINITE";
    case DefKind::kDegenerate:
      return "DEGENERATE";
  }
  return "?";
}

Json to_json(const Definiteness& d) {
  return {{"kind", to_string(d.kind)}, {"signature", {d.p, d.q}}};
}

std::string to_string(const Definiteness& d) {
  return std::string(to_string(d.kind)) + " (" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

namespace {

bool alpha_is_conjugation(const Automorphism& alpha, const EmbeddingContext& ctx) {
  return ctx.conjugation() && *ctx.conjugation() == alpha.image;
}

// Sign variations of a sequence, zeros skipped.
std::size_t variations(const std::vector<SignVal>& s) {
  std::size_t v = 0;
  SignVal last = SignVal::kZero;
  for (SignVal x : s) {
    if (x == SignVal::kZero) continue;
    if (last != SignVal::kZero && x != last) ++v;
    last = x;
  }
  return v;
}

SignVal negate(SignVal s) {
  return s == SignVal::kPos ? SignVal::kNeg : (s == SignVal::kNeg ? SignVal::kPos : SignVal::kZero);
}

// Signature from the signs of a real-rooted characteristic polynomial
// (constant first): positive roots are the sign variations of chi(X),
// negative roots those of chi(-X).
Definiteness from_charpoly_signs(const std::vector<SignVal>& c) {
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == SignVal::kZero) ++zeros;
  std::vector<SignVal> neg(c);
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = negate(neg[k]);
  Definiteness d;
  d.p = variations(c);
  d.q = variations(neg);
  if (d.p + d.q + zeros != c.size() - 1)
    throw InternalConsistencyError("characteristic polynomial of a symmetric matrix is not real-rooted");
  if (zeros > 0)
    d.kind = DefKind::kDegenerate;
  else if (d.q == 0)
    d.kind = DefKind::kPosDef;
  else if (d.p == 0)
    d.kind = DefKind::kNegDef;
  else
    d.kind = DefKind::kIndefinite;
  return d;
}

Definiteness classify(std::size_t p, std::size_t q) {
  Definiteness d{DefKind::kIndefinite, p, q};
  if (q == 0) d.kind = DefKind::kPosDef;
  if (p == 0) d.kind = DefKind::kNegDef;
  return d;
}

}  // namespace

GramMatrix trace_form_gram(const Involution& tau) {
  const CrossedProduct& B = tau.algebra();
  const std::size_t dim = B.dim_q();
  std::vector<AlgElem> basis, images;
  for (std::size_t i = 0; i < dim; ++i) {
    basis.push_back(B.basis(i));
    images.push_back(tau(basis.back()));
  }
  Matrix<Rat> g(dim, dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      NFElem t = reduced_trace(images[i] * basis[j]) + reduced_trace(images[j] * basis[i]);
      if (!t.is_rational())
        throw InternalConsistencyError("trace form entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") = " + t.to_string() + " is not in k0");
      g(i, j) = g(j, i) = t[0] / 2;
    }
  return GramMatrix{std::move(g)};
}

Definiteness definiteness(const Matrix<Rat>& sym) {
  if (sym.rows() != sym.cols() || !(sym == sym.transpose()))
    throw StructuralError("definiteness needs a symmetric matrix");
  std::vector<SignVal> signs;
  for (const auto& c : charpoly(sym)) signs.push_back(sign_of(c));
  return from_charpoly_signs(signs);
}

Definiteness definiteness(const GramMatrix& gm, const EmbeddingContext&) { return definiteness(gm.entries); }

bool is_positive(const Involution& tau, const EmbeddingContext& ctx) {
  return definiteness(trace_form_gram(tau), ctx).kind == DefKind::kPosDef;
}

TransportMatrix transport_hermitian(const Involution& tau) {
  const CrossedProduct& B = tau.algebra();
  const std::size_t n = B.n();
  const FieldPtr& L = B.field();
  const Automorphism& alpha = tau.alpha();

  std::vector<AlgElem> gens;
  for (std::size_t s = 0; s < n; ++s) gens.push_back(B.generator(s));
  gens.push_back(B.scalar(L->generator()));

  Matrix<NFElem> sys(gens.size() * n * n, n * n, L->zero());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix<NFElem> m1 = regular_rep(tau(gens[g]));
    Matrix<NFElem> lb = regular_rep(gens[g]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = g * n * n + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, i * n + k) += m1(k, j);
          sys(row, k * n + j) -= apply(alpha, lb(k, i));
        }
      }
  }
  auto ker = kernel(sys);
  if (ker.size() != 1)
    throw InternalConsistencyError("transport equation has a solution space of dimension " +
                                   std::to_string(ker.size()) + " over L, expected 1");
  TransportMatrix tm{Matrix<NFElem>(n, n, L->zero()), false, alpha.image, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tm.A(i, j) = ker[0][i * n + j];

  // A^{dagger alpha} = c A for a scalar c with alpha(c) c = 1.
  std::optional<NFElem> c;
  for (std::size_t i = 0; i < n && !c; ++i)
    for (std::size_t j = 0; j < n && !c; ++j)
      if (!tm.A(i, j).is_zero()) c = apply(alpha, tm.A(j, i)) / tm.A(i, j);
  if (!c) throw InternalConsistencyError("transport matrix is zero");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (apply(alpha, tm.A(j, i)) != *c * tm.A(i, j))
        throw StructuralError("transport matrix has no alpha-Hermitian multiple");
  if (!c->is_one()) {
    if (!(apply(alpha, *c) * *c).is_one())
      throw InternalConsistencyError("alpha(c) c != 1 for A^{dagger alpha} = c A");
    std::vector<NFElem> thetas = {L->one(), B.tower().sqrt_md()};
    for (std::size_t k = 1; k < L->degree(); ++k) thetas.push_back(L->generator().pow(static_cast<unsigned>(k)));
    bool done = false;
    for (const auto& theta : thetas) {
      NFElem beta = theta + *c * apply(alpha, theta);
      if (beta.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tm.A(i, j) = beta * tm.A(i, j);
      tm.notes.push_back("A^{dagger alpha} = (" + c->to_string() + ") A; rescaled by " + beta.to_string());
      done = true;
      break;
    }
    if (!done) throw StructuralError("no Hermitian normalization of the transport matrix found");
  }
  tm.hermitian_normalized = true;
  return tm;
}

TransportSignature transport_definiteness(const TransportMatrix& tm, const EmbeddingContext& ctx) {
  if (!tm.hermitian_normalized) throw DomainError("transport matrix is not Hermitian-normalized");
  const std::size_t n = tm.A.rows();
  TransportSignature out;
  if (!ctx.conjugation() || *ctx.conjugation() != tm.alpha_image) {
    out.alpha_is_conjugation = false;
    out.hermitian = Definiteness{DefKind::kIndefinite, 0, 0};
    out.implied_trace_form = Definiteness{DefKind::kIndefinite, n * n, n * n};
    out.notes.push_back("alpha is not complex conjugation at this embedding: k is real, k (x) R = R x R and tau "
                        "exchanges the factors, so the trace form is hyperbolic");
    return out;
  }
  std::vector<SignVal> minors = {SignVal::kPos};
  bool zero_minor = false;
  for (std::size_t k = 1; k <= n && !zero_minor; ++k) {
    Matrix<NFElem> sub(k, k, tm.A.zero());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = tm.A(i, j);
    SignVal s = sign_of(determinant(sub), ctx);
    if (s == SignVal::kZero) zero_minor = true;
    minors.push_back(s);
  }
  Definiteness h;
  if (!zero_minor) {
    const std::size_t q = variations(minors);
    h = classify(n - q, q);
  } else {
    out.notes.push_back("zero leading minor; signature read from the characteristic polynomial");
    std::vector<SignVal> signs;
    for (const auto& c : charpoly(tm.A)) signs.push_back(sign_of(c, ctx));
    h = from_charpoly_signs(signs);
  }
  if (h.kind != DefKind::kDegenerate && h.q > h.p) {
    std::swap(h.p, h.q);
    h = classify(h.p, h.q);
    out.sign_flipped = true;
    out.notes.push_back("reported for -A");
  }
  out.hermitian = h;
  if (h.kind == DefKind::kDegenerate) {
    out.implied_trace_form = Definiteness{DefKind::kDegenerate, 0, 0};
  } else {
    out.implied_trace_form = classify(2 * (h.p * h.p + h.q * h.q), 4 * h.p * h.q);
  }
  return out;
}

namespace {

// Positivity facts shared by the checkers; nullopt when tau does not validate.
std::optional<bool> positive_if_valid(const Involution& tau, const EmbeddingContext& ctx) {
  if (!validate_involution(tau).ok()) return std::nullopt;
  return is_positive(tau, ctx);
}

}  // namespace

CheckResult prop22_check(const Involution& tau, const EmbeddingContext& ctx) {
  Stopwatch sw;
  CheckResult c("prop22_d_positive");
  const Tower& t = tau.algebra().tower();
  auto pos = positive_if_valid(tau, ctx);
  if (!pos) {
    c.not_applicable("tau is not a unitary involution");
  } else {
    const SignVal sd = sign_of(t.d(), ctx);
    c.details["d"] = t.d().to_string();
    c.details["sign_d"] = to_string(sd);
    c.details["is_positive"] = *pos;
    if (*pos && sd != SignVal::kPos) c.fail({{"d", t.d().to_string()}, {"sign_d", to_string(sd)}, {"is_positive", true}});
    if (sd == SignVal::kPos)
      c.notes.push_back(std::string("observation: d > 0 and the constructed tau is ") +
                        (*pos ? "positive" : "not positive") +
                        "; the converse concerns some involution, not necessarily this one");
    else
      c.notes.push_back("contrapositive instance: d is not positive and tau is not positive");
  }
  c.seconds = sw.seconds();
  c.precision_used = ctx.precision_bits();
  return c;
}

NFElem primitive_element(const Subfield& sub, int height_bound) {
  const std::size_t dim = sub.dimension();
  const FieldPtr& L = sub.field();
  if (dim <= 1) return L->one();
  // Digits run through 0, 1, -1, 2, -2, ...; the first coordinate is most significant.
  auto digit = [](int k) { return k % 2 ? (k + 1) / 2 : -(k / 2); };
  for (int h = 1; h <= height_bound; ++h) {
    const int base = 2 * h + 1;
    std::vector<int> ctr(dim, 0);
    while (true) {
      int top = 0;
      for (int v : ctr) top = std::max(top, std::abs(digit(v)));
      if (top == h) {
        NFElem a = L->zero();
        for (std::size_t i = 0; i < dim; ++i) a += Rat(digit(ctr[i])) * sub.basis()[i];
        if (minimal_polynomial(a).degree() == static_cast<int>(dim)) return a;
      }
      std::size_t pos = dim;
      while (pos > 0 && ++ctr[pos - 1] == base) ctr[--pos] = 0;
      if (pos == 0) break;
    }
  }
  throw SearchFailure("no primitive element of height <= " + std::to_string(height_bound));
}

CheckResult prop23_check(const Involution& tau, const EmbeddingContext& ctx) {
  Stopwatch sw;
  CheckResult c("prop23_L0_galois");
  const Tower& t = tau.algebra().tower();
  auto pos = positive_if_valid(tau, ctx);
  if (!pos || !*pos) {
    c.not_applicable(pos ? "tau is not positive" : "tau is not a unitary involution");
  } else {
    Subfield L0 = fixed_field(t, {t.alpha_index()});
    NFElem a = primitive_element(L0);
    RatPoly m = minimal_polynomial(a);
    const std::size_t roots = roots_in_subfield(m, L0);
    c.details["dim_L0"] = L0.dimension();
    c.details["primitive_element"] = a.to_string();
    c.details["min_poly"] = m.to_string();
    c.details["roots_in_L0"] = roots;
    if (roots != static_cast<std::size_t>(m.degree()))
      c.fail({{"primitive_element", a.to_literal()}, {"min_poly", m.to_string()}, {"roots_in_L0", roots}});
  }
  c.seconds = sw.seconds();
  return c;
}

CheckResult cor24_check(const Involution& tau, const EmbeddingContext& ctx) {
  Stopwatch sw;
  CheckResult c("cor24_alpha_central");
  const Tower& t = tau.algebra().tower();
  auto pos = positive_if_valid(tau, ctx);
  if (!pos || !*pos) {
    c.not_applicable(pos ? "tau is not positive" : "tau is not a unitary involution");
  } else {
    const Automorphism& alpha = t.alpha();
    auto all = discover_automorphisms(t);
    for (const auto& g : all) {
      NFElem ag = apply(alpha, g.image);
      NFElem ga = apply(g, alpha.image);
      if (ag != ga)
        c.fail({{"gamma", g.name}, {"gamma_image", g.image.to_literal()}, {"alpha_gamma", ag.to_literal()},
                {"gamma_alpha", ga.to_literal()}});
    }
    c.details["automorphisms"] = all.size();
  }
  c.seconds = sw.seconds();
  return c;
}

CheckResult iff_check(const std::shared_ptr<const Tower>& t, const CocycleTable& cocycle, const EmbeddingContext& ctx) {
  Stopwatch sw;
  CheckResult c("iff_positive_involution");
  c.precision_used = ctx.precision_bits();
  if (!cocycle_validate(*t, cocycle).ok()) {
    c.not_applicable("cocycle is not valid");
  } else if (!cocycle_unitary(*t, cocycle)) {
    c.not_applicable("cocycle is not unitary");
  } else if (!alpha_is_conjugation(t->alpha(), ctx)) {
    c.not_applicable("alpha is not complex conjugation at the embedding");
  } else {
    Involution tau = build_tau(CrossedProduct::create(t, cocycle));
    Report v = validate_involution(tau);
    const bool valid = v.ok();
    const bool positive = valid && is_positive(tau, ctx);
    const bool lhs = valid && positive;
    const bool rhs = condition_commute(*t);
    c.details["involution_valid"] = valid;
    c.details["is_positive"] = positive;
    c.details["lhs_positive_involution"] = lhs;
    c.details["rhs_alpha_commutes_with_G"] = rhs;
    c.details["commute_violations"] = commute_violations(*t);
    if (!valid)
      for (const auto& r : v.checks)
        if (!r.ok()) c.details["involution_witnesses"][r.check] = r.witnesses;
    c.notes.push_back("lhs is evaluated on the constructed involution, inversion on generators and alpha on L");
    if (lhs != rhs) c.fail({{"lhs", lhs}, {"rhs", rhs}, {"commute_violations", commute_violations(*t)}});
  }
  c.seconds = sw.seconds();
  return c;
}

}  // namespace posinv
