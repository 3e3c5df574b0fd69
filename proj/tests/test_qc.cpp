#include "doctest.h"

#include <random>

#include "addlin/qc.hpp"
#include "helpers.hpp"

using namespace addlin;

namespace {

// independent product route: carryless multiply on integer bits, then fold
// the exponents by x^n = 1
PolyModXn bitwise_cyclic_mul(const PolyModXn& a, const PolyModXn& b) {
  REQUIRE(a.n <= 30);
  uint64_t ua = 0, ub = 0;
  for (size_t i = 0; i < a.n; ++i) {
    ua |= uint64_t(a.c[i]) << i;
    ub |= uint64_t(b.c[i]) << i;
  }
  uint64_t p = 0;
  for (size_t i = 0; i < a.n; ++i)
    if ((ua >> i) & 1) p ^= ub << i;
  PolyModXn r = PolyModXn::zero(a.n);
  for (size_t e = 0; e < 2 * a.n; ++e)
    if ((p >> e) & 1) r.c[e % a.n] ^= 1;
  return r;
}

PolyModXn random_poly(std::mt19937_64& rng, size_t n) {
  PolyModXn p = PolyModXn::zero(n);
  for (auto& b : p.c) b = rng() & 1;
  return p;
}

bool row_in_code(const AdditiveCode& c, const std::vector<uint8_t>& row) {
  RowSolver s(c.gen());
  return s.contains_row(row.data(), row.size());
}

// rotate the coordinate pairs of a row right by one position
std::vector<uint8_t> rotate_pairs(const std::vector<uint8_t>& row) {
  const size_t n = row.size() / 2;
  std::vector<uint8_t> out(row.size());
  for (size_t j = 0; j < n; ++j) {
    size_t src = (j + n - 1) % n;
    out[2 * j] = row[2 * src];
    out[2 * j + 1] = row[2 * src + 1];
  }
  return out;
}

const std::vector<unsigned> kG22 = {2, 0};
const std::vector<unsigned> kF022 = {19, 14, 11, 10, 2, 0};
const std::vector<unsigned> kF122 = {21, 19, 18, 17, 16, 14, 10, 9, 5, 0};

}  // namespace

TEST_CASE("polynomial construction wraps exponents and cancels pairs") {
  CHECK(PolyModXn::from_exponents(7, {9}) == PolyModXn::from_exponents(7, {2}));
  CHECK(PolyModXn::from_exponents(7, {3, 3}).is_zero());
  CHECK(PolyModXn::from_exponents(5, {5}) == PolyModXn::one(5));
  CHECK(PolyModXn::zero(4).is_zero());
  CHECK_THROWS_AS(PolyModXn::zero(0), Error);
}

TEST_CASE("cyclic product matches the carryless bit route") {
  std::mt19937_64 rng(41);
  for (size_t n : {2, 3, 7, 15, 22}) {
    for (int it = 0; it < 30; ++it) {
      PolyModXn a = random_poly(rng, n), b = random_poly(rng, n);
      CHECK(poly_mul(a, b) == bitwise_cyclic_mul(a, b));
      CHECK(poly_mul(a, b) == poly_mul(b, a));
      CHECK(poly_mul(a, PolyModXn::one(n)) == a);
      PolyModXn c = random_poly(rng, n);
      CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
      CHECK(poly_mul(a, poly_add(b, c)) ==
            poly_add(poly_mul(a, b), poly_mul(a, c)));
    }
  }
}

TEST_CASE("shifts are cyclic") {
  PolyModXn p = PolyModXn::from_exponents(6, {0, 2});
  CHECK(poly_shift(p, 6) == p);
  CHECK(poly_shift(p, 1) == PolyModXn::from_exponents(6, {1, 3}));
  CHECK(poly_shift(PolyModXn::from_exponents(6, {5}), 1) == PolyModXn::one(6));
  CHECK(poly_shift(p, 4) == poly_mul(p, PolyModXn::from_exponents(6, {4})));
}

TEST_CASE("modulus mismatch is typed") {
  try {
    poly_mul(PolyModXn::one(3), PolyModXn::one(4));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::ModulusMismatch);
  }
}

TEST_CASE("trivial quasi-cyclic build") {
  FieldSpec fs(2, 1, 1);
  QcSpec spec{3, PolyModXn::one(3), PolyModXn::one(3), PolyModXn::zero(3)};
  AdditiveCode c = build_qc_additive(fs, spec);
  CHECK(c.length() == 3);
  CHECK(c.dim() == 3);
  CHECK(min_distance(c) == 1);
  // x parts only: not closed under w, and k is odd anyway
  CHECK_FALSE(is_linear(c).linear);
}

TEST_CASE("zero generator pairs are rejected") {
  FieldSpec fs(2, 1, 1);
  PolyModXn g = PolyModXn::from_exponents(3, {0, 1, 2});
  PolyModXn f = PolyModXn::from_exponents(3, {0, 1});
  // (1 + x + x^2)(1 + x) = 1 + x^3 = 0 modulo x^3 - 1
  CHECK(poly_mul(g, f).is_zero());
  try {
    build_qc_additive(fs, {3, g, f, f});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::ZeroGenerator);
  }
  try {
    build_qc_additive(FieldSpec(3, 1, 0), {3, g, f, f});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::InvalidArgument);
  }
}

TEST_CASE("random quasi-cyclic codes are shift closed") {
  std::mt19937_64 rng(42);
  FieldSpec fs(2, 1, 1);
  int built = 0;
  while (built < 20) {
    size_t n = 3 + (rng() % 6);
    QcSpec spec{n, random_poly(rng, n), random_poly(rng, n), random_poly(rng, n)};
    if (poly_mul(spec.g, spec.f0).is_zero() &&
        poly_mul(spec.g, spec.f1).is_zero())
      continue;
    AdditiveCode c = build_qc_additive(fs, spec);
    CHECK(c.dim() <= n);  // spanned by n shifts
    for (size_t r = 0; r < c.dim(); ++r) {
      std::vector<uint8_t> row(c.gen().row_ptr(r),
                               c.gen().row_ptr(r) + 2 * c.length());
      CHECK(row_in_code(c, rotate_pairs(row)));
    }
    ++built;
  }
}

TEST_CASE("the length 22 quasi-cyclic code comes out with dimension 20") {
  FieldSpec fs(2, 1, 1);
  QcSpec spec{22, PolyModXn::from_exponents(22, kG22),
              PolyModXn::from_exponents(22, kF022),
              PolyModXn::from_exponents(22, kF122)};
  AdditiveCode c = build_qc_additive(fs, spec);
  CHECK(c.length() == 22);
  CHECK(c.dim() == 20);
  CHECK(is_acd(c));
  // shift closure on a couple of rows
  std::vector<uint8_t> row(c.gen().row_ptr(0), c.gen().row_ptr(0) + 44);
  CHECK(row_in_code(c, rotate_pairs(row)));
}

TEST_CASE("extension appends the coordinate sum") {
  FieldSpec fs(2, 1, 1);
  QcSpec spec{3, PolyModXn::from_exponents(3, {0, 1}), PolyModXn::one(3),
              PolyModXn::from_exponents(3, {1})};
  AdditiveCode c = build_qc_additive(fs, spec);
  AdditiveCode e = extend(c);
  CHECK(e.length() == c.length() + 1);
  CHECK(e.dim() == c.dim());
  // every codeword of the extension ends with the sum of the others
  for (const auto& v : testutil::span_set(e.gen())) {
    auto z = phi_inverse(fs, v.data(), v.size());
    ExtElem sum{0, 0};
    for (size_t i = 0; i + 1 < z.size(); ++i) sum = ext_add(fs, sum, z[i]);
    CHECK(z.back() == sum);
  }
  // distance never drops under extension
  CHECK(min_distance(e) >= min_distance(c));
  CHECK(min_distance(e) <= min_distance(c) + 1);
}

TEST_CASE("augmentation adjoins rows on the extension side") {
  FieldSpec fs(2, 1, 1);
  QcSpec spec{4, PolyModXn::from_exponents(4, {0, 1}), PolyModXn::one(4),
              PolyModXn::zero(4)};
  AdditiveCode c = build_qc_additive(fs, spec);
  AdditiveCode a = augment_all_ones(c);
  CHECK(a.length() == c.length());
  CHECK(a.dim() >= c.dim());
  CHECK(a.dim() <= c.dim() + 2);
  std::vector<uint8_t> ones(2 * c.length(), 0);
  for (size_t i = 0; i < c.length(); ++i) ones[2 * i] = 1;
  CHECK(row_in_code(a, ones));
  CHECK_THROWS_AS(augment(c, {{ExtElem{1, 0}}}), Error);  // wrong row length
}

TEST_CASE("shortening constrains, deletes and keeps the acd property") {
  FieldSpec fs(2, 1, 1);
  const Gf& f = fs.base();

  // full space over two coordinates is ACD
  AdditiveCode full(fs, 2, GfMatrix::identity(f, 4));
  REQUIRE(is_acd(full));
  AdditiveCode s = shorten_acd(full, 1);
  CHECK(s.length() == 1);
  CHECK(s.dim() == 2);  // dropped by the block rank 2
  CHECK(is_acd(s));

  // exhaustive agreement with the definition on a random ACD code
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 10) {
    size_t n = 2 + (rng() % 3);
    size_t k = 1 + (rng() % (2 * n - 1));
    AdditiveCode c(fs, n, testutil::random_matrix(rng, f, k, 2 * n));
    if (c.dim() == 0 || !is_acd(c)) continue;
    size_t pos = 1 + (rng() % n);
    if (c.block(pos - 1).is_zero()) continue;
    AdditiveCode sh = shorten_acd(c, pos);
    CHECK(sh.dim() == c.dim() - rank(c.block(pos - 1)));
    std::set<std::vector<uint8_t>> expect;
    for (const auto& v : testutil::span_set(c.gen())) {
      if (v[2 * (pos - 1)] || v[2 * (pos - 1) + 1]) continue;
      std::vector<uint8_t> w;
      for (size_t j = 0; j < v.size(); ++j)
        if (j != 2 * (pos - 1) && j != 2 * (pos - 1) + 1) w.push_back(v[j]);
      expect.insert(w);
    }
    CHECK(testutil::span_set(sh.gen()) == expect);
    ++done;
  }
}

TEST_CASE("shortening error paths are typed") {
  FieldSpec fs(2, 1, 1);
  const Gf& f = fs.base();
  AdditiveCode full(fs, 2, GfMatrix::identity(f, 4));
  try {
    shorten_acd(full, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::PositionOutOfRange);
  }
  CHECK_THROWS_AS(shorten_acd(full, 3), Error);

  // self orthogonal code, hull is everything
  AdditiveCode selforth(fs, 2, GfMatrix::from_rows(f, 1, 4, {1, 0, 1, 0}));
  REQUIRE_FALSE(is_acd(selforth));
  try {
    shorten_acd(selforth, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::InvalidArgument);
  }

  // ACD code with a dead coordinate
  AdditiveCode dead(fs, 2, GfMatrix::from_rows(f, 2, 4, {1, 0, 0, 0,
                                                         0, 1, 0, 0}));
  REQUIRE(is_acd(dead));
  try {
    shorten_acd(dead, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::AllCoordinatesZero);
  }
  // shortening at the live coordinate empties the code
  AdditiveCode z = shorten_acd(dead, 1);
  CHECK(z.dim() == 0);
}

TEST_CASE("shortening the length 22 code keeps acd and drops to odd k") {
  FieldSpec fs(2, 1, 1);
  QcSpec spec{22, PolyModXn::from_exponents(22, kG22),
              PolyModXn::from_exponents(22, kF022),
              PolyModXn::from_exponents(22, kF122)};
  AdditiveCode c = build_qc_additive(fs, spec);
  AdditiveCode s = shorten_acd(c, 1);
  CHECK(s.length() == 21);
  CHECK(s.dim() == c.dim() - rank(c.block(0)));
  CHECK(is_acd(s));
}
