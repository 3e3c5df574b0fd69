#include "doctest.h"

#include <random>

#include "addlin/matrix.hpp"
#include "helpers.hpp"

using namespace addlin;
using testutil::random_invertible;
using testutil::random_matrix;
using testutil::span_set;

TEST_CASE("construction, indexing and equality") {
  const Gf& f = Gf::get(3);
  GfMatrix m = GfMatrix::from_rows(f, 2, 3, {1, 2, 0, 0, 1, 2});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(0, 1) == 2);
  CHECK(m.at(1, 2) == 2);
  CHECK_THROWS_AS(m.at(2, 0), Error);
  CHECK_THROWS_AS(GfMatrix::from_rows(f, 2, 2, {1, 2, 3, 0}), Error);
  CHECK(GfMatrix::identity(f, 2) ==
        GfMatrix::from_rows(f, 2, 2, {1, 0, 0, 1}));
}

TEST_CASE("product against a hand-checked example") {
  const Gf& f = Gf::get(3);
  GfMatrix a = GfMatrix::from_rows(f, 2, 2, {1, 2, 0, 1});
  GfMatrix b = GfMatrix::from_rows(f, 2, 2, {2, 1, 1, 1});
  // (1,2)*(2,1)^T = 2+2 = 1 etc.
  CHECK(a * b == GfMatrix::from_rows(f, 2, 2, {1, 0, 1, 1}));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
}

TEST_CASE("product is associative and distributes over addition") {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const Gf& f = Gf::get(q);
    for (int it = 0; it < 20; ++it) {
      GfMatrix a = random_matrix(rng, f, 3, 4);
      GfMatrix b = random_matrix(rng, f, 4, 5);
      GfMatrix c = random_matrix(rng, f, 5, 2);
      CHECK((a * b) * c == a * (b * c));
      GfMatrix b2 = random_matrix(rng, f, 4, 5);
      CHECK(a * (b + b2) == a * b + a * b2);
    }
  }
}

TEST_CASE("rref output is a reduced echelon form preserving the row space") {
  std::mt19937_64 rng(12);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const Gf& f = Gf::get(q);
    for (int it = 0; it < 40; ++it) {
      size_t rows = 1 + (rng() % 5), cols = 1 + (rng() % 6);
      GfMatrix m = random_matrix(rng, f, rows, cols);
      auto rr = rref(m);

      // pivot shape
      CHECK(rr.pivots.size() == rr.rank);
      for (size_t i = 0; i < rr.rank; ++i) {
        if (i > 0) CHECK(rr.pivots[i] > rr.pivots[i - 1]);
        CHECK(rr.m(i, rr.pivots[i]) == 1);
        for (size_t r2 = 0; r2 < rows; ++r2)
          if (r2 != i) CHECK(rr.m(r2, rr.pivots[i]) == 0);
        // nothing to the left of the pivot
        for (size_t c = 0; c < rr.pivots[i]; ++c) CHECK(rr.m(i, c) == 0);
      }
      for (size_t i = rr.rank; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) CHECK(rr.m(i, c) == 0);

      // row space unchanged and rank correct, by exhaustive span enumeration
      if (std::pow(double(q), double(rows)) <= 4096.0) {
        auto s1 = span_set(m);
        auto s2 = span_set(rr.m);
        CHECK(s1 == s2);
        size_t expect = 1;
        for (size_t i = 0; i < rr.rank; ++i) expect *= q;
        CHECK(s1.size() == expect);
      }
    }
  }
}

TEST_CASE("packed eliminators agree with the generic one exactly") {
  std::mt19937_64 rng(13);
  for (unsigned q : {2u, 4u}) {
    const Gf& f = Gf::get(q);
    // straddle the word boundaries of both packings
    for (size_t cols : {1, 7, 31, 32, 33, 63, 64, 65, 100}) {
      for (int it = 0; it < 12; ++it) {
        size_t rows = 1 + (rng() % 12);
        GfMatrix m = random_matrix(rng, f, rows, cols);
        auto a = detail::rref_generic(m);
        auto b = detail::rref_packed(m);
        CHECK(a.m == b.m);
        CHECK(a.pivots == b.pivots);
        CHECK(a.rank == b.rank);
      }
    }
  }
  CHECK(detail::packed_available(2));
  CHECK(detail::packed_available(4));
  CHECK_FALSE(detail::packed_available(3));
}

TEST_CASE("null space is the full kernel") {
  std::mt19937_64 rng(14);
  for (unsigned q : {2u, 3u, 4u}) {
    const Gf& f = Gf::get(q);
    for (int it = 0; it < 30; ++it) {
      size_t rows = 1 + (rng() % 4), cols = 1 + (rng() % 6);
      GfMatrix m = random_matrix(rng, f, rows, cols);
      GfMatrix ns = null_space(m);
      CHECK(ns.rows() == cols - rank(m));
      CHECK(rank(ns) == ns.rows());  // independent basis
      if (ns.rows() > 0) CHECK((m * ns.transpose()).is_zero());
    }
  }
  const Gf& f2 = Gf::get(2);
  CHECK(null_space(GfMatrix::identity(f2, 4)).rows() == 0);
  CHECK(null_space(GfMatrix(f2, 3, 5)).rows() == 5);
}

TEST_CASE("inverse round-trips and failures are typed") {
  std::mt19937_64 rng(15);
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const Gf& f = Gf::get(q);
    for (int it = 0; it < 15; ++it) {
      size_t n = 1 + (rng() % 5);
      GfMatrix m = random_invertible(rng, f, n);
      CHECK(m * invert(m) == GfMatrix::identity(f, n));
      CHECK(invert(m) * m == GfMatrix::identity(f, n));
    }
  }
  const Gf& f2 = Gf::get(2);
  GfMatrix sing = GfMatrix::from_rows(f2, 2, 2, {1, 1, 1, 1});
  try {
    invert(sing);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::Singular);
  }
  CHECK_THROWS_AS(invert(GfMatrix(f2, 2, 3)), Error);
}

TEST_CASE("kronecker product satisfies the mixed product property") {
  std::mt19937_64 rng(16);
  const Gf& f = Gf::get(3);
  GfMatrix a = random_matrix(rng, f, 2, 3);
  GfMatrix b = random_matrix(rng, f, 3, 2);
  GfMatrix c = random_matrix(rng, f, 3, 2);
  GfMatrix d = random_matrix(rng, f, 2, 4);
  CHECK(a.kron(c) * b.kron(d) == (a * b).kron(c * d));

  const Gf& f2 = Gf::get(2);
  GfMatrix x = GfMatrix::from_rows(f2, 1, 2, {1, 1});
  GfMatrix i2 = GfMatrix::identity(f2, 2);
  CHECK(x.kron(i2) ==
        GfMatrix::from_rows(f2, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1}));
}

TEST_CASE("vec stacks columns and supports the standard product identity") {
  const Gf& f = Gf::get(5);
  GfMatrix m = GfMatrix::from_rows(f, 2, 2, {1, 2, 3, 4});
  GfMatrix v = m.vec();
  CHECK(v.rows() == 4);
  CHECK(v(0, 0) == 1);
  CHECK(v(1, 0) == 3);
  CHECK(v(2, 0) == 2);
  CHECK(v(3, 0) == 4);
  CHECK(GfMatrix::unvec(v, 2, 2) == m);

  // vec(A X B) = (B^T kron A) vec(X)
  std::mt19937_64 rng(17);
  for (unsigned q : {2u, 3u, 4u}) {
    const Gf& g = Gf::get(q);
    for (int it = 0; it < 10; ++it) {
      GfMatrix a = random_matrix(rng, g, 3, 2);
      GfMatrix x = random_matrix(rng, g, 2, 4);
      GfMatrix b = random_matrix(rng, g, 4, 3);
      CHECK((a * x * b).vec() == b.transpose().kron(a) * x.vec());
    }
  }
}

TEST_CASE("row space intersection matches exhaustive set intersection") {
  std::mt19937_64 rng(18);
  for (unsigned q : {2u, 3u}) {
    const Gf& f = Gf::get(q);
    for (int it = 0; it < 25; ++it) {
      size_t cols = 2 + (rng() % 4);
      GfMatrix a = random_matrix(rng, f, 1 + (rng() % 3), cols);
      GfMatrix b = random_matrix(rng, f, 1 + (rng() % 3), cols);
      GfMatrix inter = row_space_intersection(a, b);

      auto sa = span_set(a), sb = span_set(b);
      std::set<std::vector<uint8_t>> expect;
      for (const auto& v : sa)
        if (sb.count(v)) expect.insert(v);
      CHECK(span_set(inter) == expect);
      CHECK(rank(inter) == inter.rows());
    }
  }
}

TEST_CASE("same_row_space sees through row operations") {
  std::mt19937_64 rng(19);
  const Gf& f = Gf::get(3);
  GfMatrix a = random_matrix(rng, f, 3, 5);
  GfMatrix t = random_invertible(rng, f, 3);
  CHECK(same_row_space(a, t * a));
  GfMatrix b = a;
  b(0, 0) = f.add(b(0, 0), 1);
  // a one-entry perturbation almost surely moves the space; verify honestly
  CHECK(same_row_space(a, b) == (span_set(a) == span_set(b)));
}

TEST_CASE("row solver inverts known products and rejects outsiders") {
  std::mt19937_64 rng(20);
  for (unsigned q : {2u, 3u, 4u}) {
    const Gf& f = Gf::get(q);
    for (int it = 0; it < 20; ++it) {
      size_t m = 2 + (rng() % 3), n = m + (rng() % 3);
      GfMatrix a = random_matrix(rng, f, m, n);
      GfMatrix y = random_matrix(rng, f, 3, m);
      RowSolver solver(a);
      auto x = solver.solve(y * a);
      REQUIRE(x.has_value());
      CHECK(*x * a == y * a);
    }
  }
  // a row outside the span must be rejected
  const Gf& f2 = Gf::get(2);
  GfMatrix a = GfMatrix::from_rows(f2, 2, 3, {1, 0, 0, 0, 1, 0});
  RowSolver solver(a);
  GfMatrix bad = GfMatrix::from_rows(f2, 1, 3, {0, 0, 1});
  CHECK_FALSE(solver.solve(bad).has_value());
  uint8_t good[3] = {1, 1, 0};
  CHECK(solver.contains_row(good, 3));
  uint8_t notin[3] = {1, 1, 1};
  CHECK_FALSE(solver.contains_row(notin, 3));
}

TEST_CASE("stacking and submatrices") {
  const Gf& f = Gf::get(2);
  GfMatrix a = GfMatrix::from_rows(f, 1, 2, {1, 0});
  GfMatrix b = GfMatrix::from_rows(f, 1, 2, {0, 1});
  CHECK(vstack(a, b) == GfMatrix::identity(f, 2));
  CHECK(hstack(a, b) == GfMatrix::from_rows(f, 1, 4, {1, 0, 0, 1}));
  CHECK_THROWS_AS(vstack(a, GfMatrix(f, 1, 3)), Error);

  GfMatrix m = GfMatrix::from_rows(f, 3, 2, {1, 0, 0, 1, 1, 1});
  CHECK(m.submatrix_rows({2, 0}) == GfMatrix::from_rows(f, 2, 2, {1, 1, 1, 0}));
  CHECK(m.submatrix_cols({1}) == GfMatrix::from_rows(f, 3, 1, {0, 1, 1}));

  const Gf& f3 = Gf::get(3);
  GfMatrix c = GfMatrix::from_rows(f3, 1, 2, {1, 2});
  CHECK_THROWS_AS(vstack(a, c), Error);  // field mismatch
}

TEST_CASE("empty matrices keep their shape through the api") {
  const Gf& f = Gf::get(2);
  GfMatrix e(f, 0, 4);
  CHECK(rank(e) == 0);
  CHECK(row_basis(e).rows() == 0);
  CHECK(null_space(e).rows() == 4);  // everything is in the kernel
  GfMatrix i4 = GfMatrix::identity(f, 4);
  CHECK(row_space_intersection(e, i4).rows() == 0);
  CHECK(vstack(e, i4) == i4);
}
