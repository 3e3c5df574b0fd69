#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "addlin/gf.hpp"
#include "addlin/matrix.hpp"

namespace addlin {

// Element of the quadratic extension F_{q^2}, written a + b*w against the
// basis {1, w} fixed by a FieldSpec. Plain value type; the field spec travels
// separately.
struct ExtElem {
  uint8_t a = 0;
  uint8_t b = 0;

  bool operator==(const ExtElem&) const = default;
  bool is_zero() const { return a == 0 && b == 0; }
};

// F_{q^2} presented as F_q[w] where w has minimal polynomial
// x^2 + c1 x + c0 over F_q. Construction checks that the polynomial is
// irreducible (no root in F_q) and that c0 is nonzero. The companion matrix
// of w drives both the extension arithmetic and the block transforms used
// throughout; its multiplicative order equals the order of w, which is
// q^2 - 1 exactly when w is primitive.
class FieldSpec {
 public:
  FieldSpec(unsigned q, uint8_t c0, uint8_t c1);

  const Gf& base() const { return *base_; }
  unsigned q() const { return base_->q(); }
  uint8_t c0() const { return c0_; }
  uint8_t c1() const { return c1_; }

  const GfMatrix& companion() const { return companion_; }
  unsigned omega_order() const { return omega_order_; }
  bool primitive() const { return omega_order_ == q() * q() - 1; }

  bool same(const FieldSpec& o) const {
    return base_ == o.base_ && c0_ == o.c0_ && c1_ == o.c1_;
  }

  // "q=<q> c0=<c0> c1=<c1>", the header line of every file format
  std::string header() const;

  // w^j for 0 <= j < omega_order()
  ExtElem omega_pow(unsigned j) const;
  // discrete log base w; fails for zero or (non-primitive specs only) for
  // elements outside the cycle of w
  unsigned omega_log(ExtElem z) const;
  bool in_omega_cycle(ExtElem z) const;

 private:
  const Gf* base_;
  uint8_t c0_, c1_;
  GfMatrix companion_;
  unsigned omega_order_;
  std::vector<ExtElem> omega_pows_;
  std::vector<int> log_;  // indexed a*q+b, -1 when not a power of w
};

ExtElem ext_add(const FieldSpec& fs, ExtElem x, ExtElem y);
ExtElem ext_sub(const FieldSpec& fs, ExtElem x, ExtElem y);
ExtElem ext_neg(const FieldSpec& fs, ExtElem x);
ExtElem ext_mul(const FieldSpec& fs, ExtElem x, ExtElem y);
ExtElem ext_scalar_mul(const FieldSpec& fs, uint8_t c, ExtElem x);
ExtElem ext_inv(const FieldSpec& fs, ExtElem x);  // throws Singular on zero
ExtElem ext_pow(const FieldSpec& fs, ExtElem x, uint64_t e);
// Frobenius z -> z^q, the nontrivial automorphism fixing F_q
ExtElem ext_frobenius(const FieldSpec& fs, ExtElem z);
// multiplication by w
ExtElem ext_times_omega(const FieldSpec& fs, ExtElem z);

// Left regular representation of z = a + b*w on the basis {1, w}: the 2x2
// matrix a*I + b*companion. Row vectors act on the right, i.e. the
// coordinate pair of y*z is (pair of y) * regular_repr(z).
GfMatrix regular_repr(const FieldSpec& fs, ExtElem z);

}  // namespace addlin
