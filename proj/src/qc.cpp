#include "addlin/qc.hpp"

#include <string>

namespace addlin {

PolyModXn PolyModXn::zero(size_t n) {
  if (n == 0) fail(Status::InvalidArgument, "polynomial modulus needs n >= 1");
  return {n, std::vector<uint8_t>(n, 0)};
}

PolyModXn PolyModXn::one(size_t n) {
  PolyModXn p = zero(n);
  p.c[0] = 1;
  return p;
}

PolyModXn PolyModXn::from_exponents(size_t n, const std::vector<unsigned>& exps) {
  PolyModXn p = zero(n);
  for (unsigned e : exps) p.c[e % n] ^= 1;
  return p;
}

bool PolyModXn::is_zero() const {
  for (uint8_t b : c)
    if (b) return false;
  return true;
}

namespace {
void check_modulus(const PolyModXn& a, const PolyModXn& b) {
  if (a.n != b.n)
    fail(Status::ModulusMismatch, "polynomials live modulo different x^n - 1");
}
}  // namespace

PolyModXn poly_add(const PolyModXn& a, const PolyModXn& b) {
  check_modulus(a, b);
  PolyModXn r = a;
  for (size_t i = 0; i < a.n; ++i) r.c[i] ^= b.c[i];
  return r;
}

PolyModXn poly_mul(const PolyModXn& a, const PolyModXn& b) {
  check_modulus(a, b);
  PolyModXn r = PolyModXn::zero(a.n);
  for (size_t i = 0; i < a.n; ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < a.n; ++j)
      if (b.c[j]) r.c[(i + j) % a.n] ^= 1;
  }
  return r;
}

PolyModXn poly_shift(const PolyModXn& a, size_t i) {
  PolyModXn r = PolyModXn::zero(a.n);
  for (size_t j = 0; j < a.n; ++j) r.c[(j + i) % a.n] = a.c[j];
  return r;
}

AdditiveCode build_qc_additive(const FieldSpec& fs, const QcSpec& spec) {
  if (fs.q() != 2)
    fail(Status::InvalidArgument, "the quasi-cyclic construction needs q = 2");
  if (spec.n == 0) fail(Status::InvalidArgument, "length must be positive");
  check_modulus(spec.g, spec.f0);
  check_modulus(spec.g, spec.f1);
  if (spec.g.n != spec.n)
    fail(Status::ModulusMismatch, "polynomial modulus differs from the length");

  PolyModXn gf0 = poly_mul(spec.g, spec.f0);
  PolyModXn gf1 = poly_mul(spec.g, spec.f1);
  if (gf0.is_zero() && gf1.is_zero())
    fail(Status::ZeroGenerator, "g f0 and g f1 both vanish modulo x^n - 1");

  const size_t n = spec.n;
  GfMatrix rows(fs.base(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    PolyModXn r0 = poly_shift(gf0, i);
    PolyModXn r1 = poly_shift(gf1, i);
    for (size_t j = 0; j < n; ++j) {
      rows(i, 2 * j) = r0.c[j];
      rows(i, 2 * j + 1) = r1.c[j];
    }
  }
  return AdditiveCode(fs, n, rows);
}

AdditiveCode extend(const AdditiveCode& c) {
  const Gf& f = c.spec().base();
  const GfMatrix& g = c.gen();
  const size_t k = c.dim(), n = c.length();
  GfMatrix out(f, k, 2 * (n + 1));
  for (size_t r = 0; r < k; ++r) {
    uint8_t sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
      out(r, 2 * i) = g(r, 2 * i);
      out(r, 2 * i + 1) = g(r, 2 * i + 1);
      sx = f.add(sx, g(r, 2 * i));
      sy = f.add(sy, g(r, 2 * i + 1));
    }
    out(r, 2 * n) = sx;
    out(r, 2 * n + 1) = sy;
  }
  return AdditiveCode(c.spec(), n + 1, out);
}

AdditiveCode augment(const AdditiveCode& c,
                     const std::vector<std::vector<ExtElem>>& rows) {
  const FieldSpec& fs = c.spec();
  GfMatrix extra(fs.base(), rows.size(), 2 * c.length());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c.length())
      fail(Status::DimensionMismatch, "augmentation row length differs from n");
    auto expanded = phi(fs, rows[r]);
    std::copy(expanded.begin(), expanded.end(), extra.row_ptr(r));
  }
  return AdditiveCode(fs, c.length(), vstack(c.gen(), extra));
}

AdditiveCode augment_all_ones(const AdditiveCode& c) {
  std::vector<std::vector<ExtElem>> rows(2,
                                         std::vector<ExtElem>(c.length()));
  for (size_t i = 0; i < c.length(); ++i) {
    rows[0][i] = {1, 0};
    rows[1][i] = {0, 1};
  }
  return augment(c, rows);
}

AdditiveCode shorten_acd(const AdditiveCode& c, size_t pos) {
  if (pos < 1 || pos > c.length())
    fail(Status::PositionOutOfRange,
         "position " + std::to_string(pos) + " is not in 1.." +
             std::to_string(c.length()));
  if (c.length() < 2)
    fail(Status::InvalidArgument, "cannot shorten a length 1 code");
  if (!is_acd(c))
    fail(Status::InvalidArgument, "shortening requires a trivial hull");

  GfMatrix block = c.block(pos - 1);
  if (block.is_zero())
    fail(Status::AllCoordinatesZero,
         "coordinate " + std::to_string(pos) + " is identically zero");

  // rows m with m block = 0 give the subcode vanishing at pos
  GfMatrix m = null_space(block.transpose());
  GfMatrix sub = m * c.gen();
  std::vector<size_t> keep;
  for (size_t j = 0; j < 2 * c.length(); ++j)
    if (j != 2 * (pos - 1) && j != 2 * (pos - 1) + 1) keep.push_back(j);
  return AdditiveCode(c.spec(), c.length() - 1, sub.submatrix_cols(keep));
}

}  // namespace addlin
