#include "addlin/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace addlin {

bool pow_exceeds(uint64_t base, size_t exp, uint64_t budget) {
  uint64_t total = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (total > budget / base) return true;
    total *= base;
  }
  return total > budget;
}

namespace {
constexpr uint64_t kPairMask = 0x5555555555555555ull;
}  // namespace

AdditiveCode::AdditiveCode(const FieldSpec& fs, size_t n, const GfMatrix& gen)
    : spec_(fs), n_(n) {
  if (n == 0) fail(Status::InvalidArgument, "code length must be positive");
  if (&gen.field() != &fs.base())
    fail(Status::FieldMismatch, "generator matrix field differs from the field spec");
  if (gen.cols() != 2 * n)
    fail(Status::DimensionMismatch,
         "generator must have 2n columns (two per coordinate)");
  gen_ = row_basis(gen);
  reduced_ = gen_.rows() < gen.rows();
}

GfMatrix AdditiveCode::block(size_t i) const {
  if (i >= n_) fail(Status::PositionOutOfRange, "coordinate index out of range");
  return gen_.submatrix_cols({2 * i, 2 * i + 1});
}

std::vector<uint8_t> phi(const FieldSpec& fs, const std::vector<ExtElem>& z) {
  std::vector<uint8_t> out(2 * z.size());
  for (size_t i = 0; i < z.size(); ++i) {
    if (!fs.base().valid(z[i].a) || !fs.base().valid(z[i].b))
      fail(Status::FieldMismatch, "element coordinates exceed the base field");
    out[2 * i] = z[i].a;
    out[2 * i + 1] = z[i].b;
  }
  return out;
}

std::vector<ExtElem> phi_inverse(const FieldSpec& fs, const uint8_t* row,
                                 size_t len) {
  if (len % 2 != 0)
    fail(Status::DimensionMismatch, "phi image must have even length");
  std::vector<ExtElem> out(len / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    if (!fs.base().valid(row[2 * i]) || !fs.base().valid(row[2 * i + 1]))
      fail(Status::FieldMismatch, "entry exceeds the base field");
    out[i] = {row[2 * i], row[2 * i + 1]};
  }
  return out;
}

namespace {

unsigned min_distance_packed2(const GfMatrix& g, size_t n) {
  const size_t k = g.rows();
  const size_t words = (2 * n + 63) / 64;
  std::vector<uint64_t> rows(k * words, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t c = 0; c < 2 * n; ++c)
      if (g(i, c)) rows[i * words + (c >> 6)] |= 1ull << (c & 63);

  std::vector<uint64_t> cw(words, 0);
  unsigned best = std::numeric_limits<unsigned>::max();
  const uint64_t total = 1ull << k;
  for (uint64_t m = 1; m < total; ++m) {
    const size_t j = static_cast<size_t>(std::countr_zero(m));
    const uint64_t* rj = rows.data() + j * words;
    unsigned wt = 0;
    for (size_t t = 0; t < words; ++t) {
      cw[t] ^= rj[t];
      wt += static_cast<unsigned>(
          std::popcount((cw[t] | (cw[t] >> 1)) & kPairMask));
    }
    if (wt < best) {
      best = wt;
      if (best == 1) break;
    }
  }
  return best;
}

unsigned min_distance_generic(const GfMatrix& g, size_t n, const Gf& f) {
  const size_t k = g.rows();
  const unsigned q = f.q();
  std::vector<uint8_t> cw(2 * n, 0);
  std::vector<unsigned> digit(k, 0);
  std::vector<size_t> focus(k + 1);
  std::iota(focus.begin(), focus.end(), size_t{0});
  std::vector<int> dir(k, 1);

  unsigned best = std::numeric_limits<unsigned>::max();
  for (;;) {
    const size_t j = focus[0];
    focus[0] = 0;
    if (j == k) break;
    // one digit moves by +-1; the coefficient delta must be taken in the
    // field, since for extension orders consecutive integer encodings do
    // not differ by 1
    const uint8_t before = static_cast<uint8_t>(digit[j]);
    digit[j] = (dir[j] > 0) ? digit[j] + 1 : digit[j] - 1;
    const uint8_t delta = f.sub(static_cast<uint8_t>(digit[j]), before);
    const uint8_t* rj = g.row_ptr(j);
    for (size_t c = 0; c < 2 * n; ++c)
      cw[c] = f.add(cw[c], f.mul(delta, rj[c]));
    if (digit[j] == 0 || digit[j] == q - 1) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
    unsigned wt = 0;
    for (size_t i = 0; i < n; ++i)
      if (cw[2 * i] != 0 || cw[2 * i + 1] != 0) ++wt;
    if (wt < best) {
      best = wt;
      if (best == 1) break;
    }
  }
  return best;
}

}  // namespace

unsigned min_distance(const AdditiveCode& c, uint64_t budget) {
  const size_t k = c.dim();
  if (k == 0)
    fail(Status::InvalidArgument, "the zero code has no minimum distance");
  const unsigned q = c.spec().q();
  if (pow_exceeds(q, k, budget))
    fail(Status::BudgetExceeded,
         "enumerating q^k = " + std::to_string(q) + "^" + std::to_string(k) +
             " codewords exceeds the budget of " + std::to_string(budget));
  if (q == 2) return min_distance_packed2(c.gen(), c.length());
  return min_distance_generic(c.gen(), c.length(), c.spec().base());
}

IsLinearResult is_linear(const AdditiveCode& c) {
  const size_t k = c.dim();
  if (k % 2 != 0) return {false, std::nullopt};
  if (k == 0) return {true, GfMatrix(c.spec().base(), 0, 0)};

  // right-multiply each coordinate block by the companion matrix of w;
  // linearity says every row of the result stays in the row space
  const GfMatrix& g = c.gen();
  const GfMatrix& m = c.spec().companion();
  const Gf& f = c.spec().base();
  const size_t n = c.length();
  GfMatrix b(f, k, 2 * n);
  for (size_t r = 0; r < k; ++r)
    for (size_t i = 0; i < n; ++i) {
      uint8_t x = g(r, 2 * i), y = g(r, 2 * i + 1);
      b(r, 2 * i) = f.add(f.mul(x, m(0, 0)), f.mul(y, m(1, 0)));
      b(r, 2 * i + 1) = f.add(f.mul(x, m(0, 1)), f.mul(y, m(1, 1)));
    }
  RowSolver solver(g);
  auto r = solver.solve(b);
  if (!r) return {false, std::nullopt};
  return {true, std::move(r)};
}

uint8_t symplectic_form(const Gf& f, const uint8_t* x, const uint8_t* y,
                        size_t len) {
  if (len % 2 != 0)
    fail(Status::DimensionMismatch, "vectors must have even length");
  uint8_t acc = 0;
  for (size_t i = 0; i + 1 < len; i += 2)
    acc = f.add(acc, f.sub(f.mul(x[i], y[i + 1]), f.mul(x[i + 1], y[i])));
  return acc;
}

uint8_t alternating_form(const FieldSpec& fs, const std::vector<ExtElem>& x,
                         const std::vector<ExtElem>& y) {
  if (x.size() != y.size())
    fail(Status::DimensionMismatch, "vectors have different lengths");
  ExtElem acc{0, 0};
  for (size_t i = 0; i < x.size(); ++i) {
    ExtElem t = ext_sub(fs, ext_mul(fs, x[i], ext_frobenius(fs, y[i])),
                        ext_mul(fs, ext_frobenius(fs, x[i]), y[i]));
    acc = ext_add(fs, acc, t);
  }
  ExtElem denom = ext_sub(fs, ext_frobenius(fs, {0, 1}), {0, 1});
  ExtElem r = ext_mul(fs, acc, ext_inv(fs, denom));
  if (r.b != 0) fail(Status::Internal, "alternating form escaped the base field");
  return r.a;
}

AdditiveCode symplectic_dual(const AdditiveCode& c) {
  const Gf& f = c.spec().base();
  const GfMatrix& g = c.gen();
  const size_t n = c.length();
  GfMatrix gj(f, c.dim(), 2 * n);
  for (size_t r = 0; r < c.dim(); ++r)
    for (size_t i = 0; i < n; ++i) {
      // column block times [[0,1],[-1,0]]: (a, b) -> (-b, a)
      gj(r, 2 * i) = f.neg(g(r, 2 * i + 1));
      gj(r, 2 * i + 1) = g(r, 2 * i);
    }
  return AdditiveCode(c.spec(), n, null_space(gj));
}

AdditiveCode hull(const AdditiveCode& c) {
  AdditiveCode dual = symplectic_dual(c);
  return AdditiveCode(c.spec(), c.length(),
                      row_space_intersection(c.gen(), dual.gen()));
}

bool is_acd(const AdditiveCode& c) {
  const size_t hull_dim = hull(c).dim();
  const GfMatrix& g = c.gen();
  const Gf& f = c.spec().base();
  GfMatrix gj(f, c.dim(), 2 * c.length());
  for (size_t r = 0; r < c.dim(); ++r)
    for (size_t i = 0; i < c.length(); ++i) {
      gj(r, 2 * i) = f.neg(g(r, 2 * i + 1));
      gj(r, 2 * i + 1) = g(r, 2 * i);
    }
  const size_t gram_rank = rank(gj * g.transpose());
  if (hull_dim != c.dim() - gram_rank)
    fail(Status::Internal, "hull dimension and Gram rank disagree");
  return hull_dim == 0;
}

std::vector<size_t> ext_rref(const FieldSpec& fs,
                             std::vector<std::vector<ExtElem>>& rows) {
  std::vector<size_t> pivots;
  if (rows.empty()) return pivots;
  const size_t n = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < n && r < rows.size(); ++col) {
    size_t piv = rows.size();
    for (size_t i = r; i < rows.size(); ++i)
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    ExtElem s = ext_inv(fs, rows[r][col]);
    for (size_t j = col; j < n; ++j) rows[r][j] = ext_mul(fs, s, rows[r][j]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      ExtElem c = rows[i][col];
      for (size_t j = col; j < n; ++j)
        rows[i][j] = ext_sub(fs, rows[i][j], ext_mul(fs, c, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

LinearCodeExt::LinearCodeExt(const FieldSpec& fs, size_t n,
                             std::vector<std::vector<ExtElem>> rows)
    : spec_(fs), n_(n), rows_(std::move(rows)) {
  if (n == 0) fail(Status::InvalidArgument, "code length must be positive");
  for (const auto& row : rows_) {
    if (row.size() != n)
      fail(Status::DimensionMismatch, "generator row length differs from n");
    for (ExtElem z : row)
      if (!fs.base().valid(z.a) || !fs.base().valid(z.b))
        fail(Status::FieldMismatch, "entry exceeds the base field");
  }
  const size_t given = rows_.size();
  auto pivots = ext_rref(spec_, rows_);
  rows_.resize(pivots.size());
  reduced_ = rows_.size() < given;
}

AdditiveCode LinearCodeExt::to_additive() const {
  const size_t m = rows_.size();
  GfMatrix g(spec_.base(), 2 * m, 2 * n_);
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = 0; i < n_; ++i) {
      ExtElem z = rows_[j][i];
      ExtElem wz = ext_times_omega(spec_, z);
      g(2 * j, 2 * i) = z.a;
      g(2 * j, 2 * i + 1) = z.b;
      g(2 * j + 1, 2 * i) = wz.a;
      g(2 * j + 1, 2 * i + 1) = wz.b;
    }
  }
  return AdditiveCode(spec_, n_, g);
}

bool hermitian_lcd(const LinearCodeExt& c) {
  const size_t m = c.dim();
  if (m == 0) return true;
  const FieldSpec& fs = c.spec();
  std::vector<std::vector<ExtElem>> gram(m, std::vector<ExtElem>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      ExtElem acc{0, 0};
      for (size_t t = 0; t < c.length(); ++t)
        acc = ext_add(
            fs, acc,
            ext_mul(fs, c.rows()[i][t], ext_frobenius(fs, c.rows()[j][t])));
      gram[i][j] = acc;
    }
  return ext_rref(fs, gram).size() == m;
}

}  // namespace addlin
