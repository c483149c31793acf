#include "posinv/embedding.hpp"

#include "posinv/errors.hpp"

namespace posinv {

const char* to_string(SignVal s) {
  switch (s) {
    case SignVal::kNeg:
      return "NEG";
    case SignVal::kZero:
      return "ZERO";
    case SignVal::kPos:
      return "POS";
  }
  return "?";
}

EmbeddingContext EmbeddingContext::create(const FieldPtr& field, std::complex<long double> hint,
                                          unsigned precision_bits, unsigned max_precision_bits) {
  if (precision_bits == 0 || max_precision_bits < precision_bits) {
    throw InputError("precision bits must satisfy 0 < precision <= max precision");
  }
  EmbeddingContext ctx;
  ctx.field_ = field;
  ctx.isolation_ = std::make_shared<const RootIsolation>(field->min_poly());
  ctx.root_index_ = ctx.isolation_->nearest(hint);
  ctx.precision_bits_ = precision_bits;
  ctx.max_precision_bits_ = max_precision_bits;
  ctx.root_box_ = ctx.isolation_->refine(ctx.root_index_, precision_bits).box();
  return ctx;
}

EmbeddingContext EmbeddingContext::with_precision(unsigned bits) const {
  EmbeddingContext ctx = *this;
  ctx.precision_bits_ = bits;
  if (bits > ctx.max_precision_bits_) ctx.max_precision_bits_ = bits;
  ctx.root_box_ = isolation_->refine(root_index_, bits).box();
  return ctx;
}

EmbeddingContext EmbeddingContext::with_conjugation(const NFElem& generator_image) const {
  require_same_field(field_->generator(), generator_image);
  EmbeddingContext ctx = *this;
  ctx.conjugation_ = generator_image;
  return ctx;
}

ComplexBox embed(const NFElem& a, const EmbeddingContext& ctx) {
  if (!a.field()->same_as(*ctx.field())) throw StructuralError("embedding context belongs to a different field");
  const unsigned bits = ctx.precision_bits() + 8;
  ComplexBox acc = ComplexBox::point(0);
  const auto& cs = a.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc = (acc * ctx.root_box()).round_out(bits);
    acc.re = acc.re + RealInterval::point(cs[k]);
  }
  return acc;
}

SignVal sign_of(const Rat& q) { return q > 0 ? SignVal::kPos : (q < 0 ? SignVal::kNeg : SignVal::kZero); }

SignVal sign_of(const NFElem& a, const EmbeddingContext& ctx) {
  if (a.is_zero()) return SignVal::kZero;
  if (a.is_rational()) return sign_of(a[0]);
  if (!ctx.conjugation() || a.substitute(*ctx.conjugation()) != a) {
    throw DomainError("sign_of: element " + a.to_string() + " is not certifiably real under the embedding");
  }
  for (unsigned bits = ctx.precision_bits(); bits <= ctx.max_precision_bits(); bits *= 2) {
    EmbeddingContext c = bits == ctx.precision_bits() ? ctx : ctx.with_precision(bits);
    ComplexBox box = embed(a, c);
    if (!box.im.contains_zero()) {
      throw InternalConsistencyError("element fixed by conjugation has a non-real embedding");
    }
    if (box.re.lo > 0) return SignVal::kPos;
    if (box.re.hi < 0) return SignVal::kNeg;
  }
  throw PrecisionExhausted("sign_of: no sign separation for " + a.to_string() + " within " +
                           std::to_string(ctx.max_precision_bits()) + " bits");
}

bool verify_alpha_is_conjugation(const NFElem& alpha_image, const EmbeddingContext& ctx) {
  const RootIsolation& iso = ctx.isolation();
  // The conjugate of the chosen root is itself a root of m (real coefficients).
  std::optional<std::size_t> conj_root;
  std::optional<std::size_t> image_root;
  for (unsigned bits = ctx.precision_bits(); bits <= ctx.max_precision_bits(); bits *= 2) {
    EmbeddingContext c = bits == ctx.precision_bits() ? ctx : ctx.with_precision(bits);
    if (!conj_root) conj_root = iso.locate(c.root_box().conj());
    ComplexBox img = embed(alpha_image, c);
    if (!image_root) image_root = iso.locate(img);
    if (conj_root && image_root) return *conj_root == *image_root;
    // A box disjoint from the conjugate's disk already certifies a mismatch.
    if (conj_root && !img.overlaps(iso.disk(*conj_root).box())) return false;
  }
  throw PrecisionExhausted("verify_alpha_is_conjugation: undecided within " +
                           std::to_string(ctx.max_precision_bits()) + " bits");
}

}  // namespace posinv
