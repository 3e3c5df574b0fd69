#include "addlin/field.hpp"

namespace addlin {

FieldSpec::FieldSpec(unsigned q, uint8_t c0, uint8_t c1)
    : base_(&Gf::get(q)), c0_(c0), c1_(c1) {
  const Gf& f = *base_;
  if (!f.valid(c0) || !f.valid(c1))
    fail(Status::InvalidArgument, "coefficients must be elements of F_q");
  if (c0 == 0)
    fail(Status::ZeroConstantTerm, "x^2 + c1 x + c0 needs c0 != 0");
  for (unsigned v = 0; v < q; ++v) {
    uint8_t x = static_cast<uint8_t>(v);
    uint8_t val = f.add(f.add(f.mul(x, x), f.mul(c1, x)), c0);
    if (val == 0)
      fail(Status::ReduciblePolynomial,
           "x^2 + c1 x + c0 has the root " + std::to_string(v) + " in F_q");
  }

  companion_ = GfMatrix(f, 2, 2);
  companion_(0, 1) = 1;
  companion_(1, 0) = f.neg(c0);
  companion_(1, 1) = f.neg(c1);

  // walk the cycle of w to find its order and to fill the log table
  log_.assign(q * q, -1);
  ExtElem z{1, 0};
  for (;;) {
    log_[z.a * q + z.b] = static_cast<int>(omega_pows_.size());
    omega_pows_.push_back(z);
    z = ext_times_omega(*this, z);
    if (z.a == 1 && z.b == 0) break;
  }
  omega_order_ = static_cast<unsigned>(omega_pows_.size());
}

std::string FieldSpec::header() const {
  return "q=" + std::to_string(q()) + " c0=" + std::to_string(c0_) +
         " c1=" + std::to_string(c1_);
}

ExtElem FieldSpec::omega_pow(unsigned j) const {
  return omega_pows_[j % omega_order_];
}

bool FieldSpec::in_omega_cycle(ExtElem z) const {
  return !z.is_zero() && log_[z.a * q() + z.b] >= 0;
}

unsigned FieldSpec::omega_log(ExtElem z) const {
  if (z.is_zero()) fail(Status::InvalidArgument, "zero has no discrete log");
  int l = log_[z.a * q() + z.b];
  if (l < 0)
    fail(Status::InvalidArgument,
         "element is not a power of w (w is not primitive for this spec)");
  return static_cast<unsigned>(l);
}

namespace {
void check_elem(const FieldSpec& fs, ExtElem x) {
  if (!fs.base().valid(x.a) || !fs.base().valid(x.b))
    fail(Status::FieldMismatch, "element coordinates exceed the base field");
}
}  // namespace

ExtElem ext_add(const FieldSpec& fs, ExtElem x, ExtElem y) {
  check_elem(fs, x);
  check_elem(fs, y);
  const Gf& f = fs.base();
  return {f.add(x.a, y.a), f.add(x.b, y.b)};
}

ExtElem ext_sub(const FieldSpec& fs, ExtElem x, ExtElem y) {
  check_elem(fs, x);
  check_elem(fs, y);
  const Gf& f = fs.base();
  return {f.sub(x.a, y.a), f.sub(x.b, y.b)};
}

ExtElem ext_neg(const FieldSpec& fs, ExtElem x) {
  check_elem(fs, x);
  const Gf& f = fs.base();
  return {f.neg(x.a), f.neg(x.b)};
}

ExtElem ext_mul(const FieldSpec& fs, ExtElem x, ExtElem y) {
  check_elem(fs, x);
  check_elem(fs, y);
  const Gf& f = fs.base();
  // (a + b w)(c + d w) with w^2 = -c1 w - c0
  uint8_t bd = f.mul(x.b, y.b);
  uint8_t re = f.sub(f.mul(x.a, y.a), f.mul(fs.c0(), bd));
  uint8_t im = f.sub(f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)), f.mul(fs.c1(), bd));
  return {re, im};
}

ExtElem ext_scalar_mul(const FieldSpec& fs, uint8_t c, ExtElem x) {
  check_elem(fs, x);
  const Gf& f = fs.base();
  return {f.mul(c, x.a), f.mul(c, x.b)};
}

ExtElem ext_times_omega(const FieldSpec& fs, ExtElem z) {
  check_elem(fs, z);
  const Gf& f = fs.base();
  return {f.neg(f.mul(fs.c0(), z.b)), f.sub(z.a, f.mul(fs.c1(), z.b))};
}

ExtElem ext_frobenius(const FieldSpec& fs, ExtElem z) {
  check_elem(fs, z);
  const Gf& f = fs.base();
  // w^q = -c1 - w, the other root of the minimal polynomial
  return {f.sub(z.a, f.mul(fs.c1(), z.b)), f.neg(z.b)};
}

ExtElem ext_inv(const FieldSpec& fs, ExtElem x) {
  check_elem(fs, x);
  if (x.is_zero()) fail(Status::Singular, "inverse of zero in F_{q^2}");
  const Gf& f = fs.base();
  ExtElem conj = ext_frobenius(fs, x);
  ExtElem norm = ext_mul(fs, x, conj);
  if (norm.b != 0 || norm.a == 0)
    fail(Status::Internal, "field norm escaped the base field");
  return ext_scalar_mul(fs, f.inv(norm.a), conj);
}

ExtElem ext_pow(const FieldSpec& fs, ExtElem x, uint64_t e) {
  ExtElem r{1, 0};
  ExtElem base = x;
  while (e) {
    if (e & 1) r = ext_mul(fs, r, base);
    base = ext_mul(fs, base, base);
    e >>= 1;
  }
  return r;
}

GfMatrix regular_repr(const FieldSpec& fs, ExtElem z) {
  check_elem(fs, z);
  const Gf& f = fs.base();
  GfMatrix m(f, 2, 2);
  m(0, 0) = z.a;
  m(0, 1) = z.b;
  m(1, 0) = f.mul(z.b, f.neg(fs.c0()));
  m(1, 1) = f.sub(z.a, f.mul(fs.c1(), z.b));
  return m;
}

}  // namespace addlin
