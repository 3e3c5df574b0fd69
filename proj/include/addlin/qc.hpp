#pragma once

#include <vector>

#include "addlin/code.hpp"

namespace addlin {

// Polynomial in F_2[x]/(x^n - 1), dense little-endian coefficients.
struct PolyModXn {
  size_t n = 0;
  std::vector<uint8_t> c;

  static PolyModXn zero(size_t n);
  static PolyModXn one(size_t n);
  // exponents may repeat (pairs cancel over F_2) and wrap modulo n
  static PolyModXn from_exponents(size_t n, const std::vector<unsigned>& exps);

  bool is_zero() const;
  bool operator==(const PolyModXn&) const = default;
};

PolyModXn poly_add(const PolyModXn& a, const PolyModXn& b);
// cyclic convolution, i.e. the product in F_2[x]/(x^n - 1)
PolyModXn poly_mul(const PolyModXn& a, const PolyModXn& b);
// multiplication by x^i
PolyModXn poly_shift(const PolyModXn& a, size_t i);

struct QcSpec {
  size_t n = 0;
  PolyModXn g, f0, f1;
};

// Quasi-cyclic additive code over F_4: the span of the n shifted rows
// x^i (g f0, g f1), each row expanded coordinatewise through phi with
// z_j = (x^i g f0)_j + w (x^i g f1)_j. Requires q = 2. Throws ZeroGenerator
// when both products vanish.
AdditiveCode build_qc_additive(const FieldSpec& fs, const QcSpec& spec);

// Append one coordinate holding the F_{q^2} sum of all existing
// coordinates of each codeword. Length grows by one, dimension is kept.
AdditiveCode extend(const AdditiveCode& c);

// Adjoin generators given on the extension side; the result is reduced to
// a basis, so the dimension grows by at most 2 per row.
AdditiveCode augment(const AdditiveCode& c,
                     const std::vector<std::vector<ExtElem>>& rows);

// augment with the all-ones vector and w times it
AdditiveCode augment_all_ones(const AdditiveCode& c);

// Take the subcode vanishing at the given coordinate (1-based) and delete
// that coordinate. Requires an ACD input; the dimension drops by exactly
// the rank of the deleted column block. Throws AllCoordinatesZero when the
// block is identically zero.
AdditiveCode shorten_acd(const AdditiveCode& c, size_t pos);

}  // namespace addlin
