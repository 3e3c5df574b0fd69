#include "addlin/matrix.hpp"

#include <algorithm>
#include <string>

namespace addlin {

namespace {

void check_same_field(const GfMatrix& a, const GfMatrix& b) {
  if (&a.field() != &b.field())
    fail(Status::FieldMismatch, "matrices live over different fields");
}

}  // namespace

GfMatrix GfMatrix::identity(const Gf& f, size_t n) {
  GfMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GfMatrix GfMatrix::from_rows(const Gf& f, size_t rows, size_t cols,
                             std::initializer_list<unsigned> entries) {
  std::vector<uint8_t> v;
  v.reserve(entries.size());
  for (unsigned e : entries) v.push_back(f.check(e));
  return from_rows(f, rows, cols, v);
}

GfMatrix GfMatrix::from_rows(const Gf& f, size_t rows, size_t cols,
                             const std::vector<uint8_t>& entries) {
  if (entries.size() != rows * cols)
    fail(Status::DimensionMismatch, "entry count does not match shape");
  GfMatrix m(f, rows, cols);
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!f.valid(entries[i])) fail(Status::InvalidArgument, "entry out of field range");
    m.v_[i] = entries[i];
  }
  return m;
}

uint8_t GfMatrix::at(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_) fail(Status::InvalidArgument, "matrix index out of range");
  return v_[r * cols_ + c];
}

void GfMatrix::check_same_shape(const GfMatrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Status::DimensionMismatch, "matrix shapes differ");
}

GfMatrix GfMatrix::operator+(const GfMatrix& o) const {
  check_same_shape(o);
  GfMatrix r(*field_, rows_, cols_);
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_->add(v_[i], o.v_[i]);
  return r;
}

GfMatrix GfMatrix::operator-(const GfMatrix& o) const {
  check_same_shape(o);
  GfMatrix r(*field_, rows_, cols_);
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_->sub(v_[i], o.v_[i]);
  return r;
}

GfMatrix GfMatrix::operator*(const GfMatrix& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_)
    fail(Status::DimensionMismatch, "inner dimensions do not match");
  const Gf& f = *field_;
  GfMatrix r(f, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    uint8_t* out = r.row_ptr(i);
    for (size_t t = 0; t < cols_; ++t) {
      uint8_t a = v_[i * cols_ + t];
      if (a == 0) continue;
      const uint8_t* src = o.row_ptr(t);
      if (a == 1) {
        for (size_t j = 0; j < o.cols_; ++j) out[j] = f.add(out[j], src[j]);
      } else {
        for (size_t j = 0; j < o.cols_; ++j) out[j] = f.add(out[j], f.mul(a, src[j]));
      }
    }
  }
  return r;
}

bool GfMatrix::operator==(const GfMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
}

GfMatrix GfMatrix::scaled(uint8_t c) const {
  GfMatrix r(*field_, rows_, cols_);
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_->mul(c, v_[i]);
  return r;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix r(*field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r(j, i) = v_[i * cols_ + j];
  return r;
}

bool GfMatrix::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](uint8_t x) { return x == 0; });
}

GfMatrix GfMatrix::kron(const GfMatrix& b) const {
  check_same_field(*this, b);
  GfMatrix r(*field_, rows_ * b.rows_, cols_ * b.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      uint8_t a = v_[i * cols_ + j];
      if (a == 0) continue;
      for (size_t bi = 0; bi < b.rows_; ++bi)
        for (size_t bj = 0; bj < b.cols_; ++bj)
          r(i * b.rows_ + bi, j * b.cols_ + bj) = field_->mul(a, b(bi, bj));
    }
  return r;
}

GfMatrix GfMatrix::vec() const {
  GfMatrix r(*field_, rows_ * cols_, 1);
  for (size_t c = 0; c < cols_; ++c)
    for (size_t i = 0; i < rows_; ++i) r(c * rows_ + i, 0) = v_[i * cols_ + c];
  return r;
}

GfMatrix GfMatrix::unvec(const GfMatrix& v, size_t rows, size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    fail(Status::DimensionMismatch, "vector length does not match target shape");
  GfMatrix r(v.field(), rows, cols);
  for (size_t c = 0; c < cols; ++c)
    for (size_t i = 0; i < rows; ++i) r(i, c) = v(c * rows + i, 0);
  return r;
}

GfMatrix GfMatrix::submatrix_rows(const std::vector<size_t>& idx) const {
  GfMatrix r(*field_, idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) fail(Status::InvalidArgument, "row index out of range");
    std::copy(row_ptr(idx[i]), row_ptr(idx[i]) + cols_, r.row_ptr(i));
  }
  return r;
}

GfMatrix GfMatrix::submatrix_cols(const std::vector<size_t>& idx) const {
  GfMatrix r(*field_, rows_, idx.size());
  for (size_t j = 0; j < idx.size(); ++j)
    if (idx[j] >= cols_) fail(Status::InvalidArgument, "column index out of range");
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r(i, j) = v_[i * cols_ + idx[j]];
  return r;
}

GfMatrix hstack(const GfMatrix& a, const GfMatrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) fail(Status::DimensionMismatch, "hstack row counts differ");
  GfMatrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row_ptr(i), a.row_ptr(i) + a.cols(), r.row_ptr(i));
    std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols(), r.row_ptr(i) + a.cols());
  }
  return r;
}

GfMatrix vstack(const GfMatrix& a, const GfMatrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) fail(Status::DimensionMismatch, "vstack column counts differ");
  GfMatrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    std::copy(a.row_ptr(i), a.row_ptr(i) + a.cols(), r.row_ptr(i));
  for (size_t i = 0; i < b.rows(); ++i)
    std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols(), r.row_ptr(a.rows() + i));
  return r;
}

namespace detail {

bool packed_available(unsigned q) { return q == 2 || q == 4; }

RrefResult rref_generic(const GfMatrix& m) {
  RrefResult res{m, {}, 0};
  if (m.rows() == 0) return res;
  GfMatrix& a = res.m;
  const Gf& f = m.field();
  const size_t rows = m.rows(), cols = m.cols();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a.row_ptr(piv), a.row_ptr(piv) + cols, a.row_ptr(r));
    uint8_t s = f.inv(a(r, col));
    if (s != 1)
      for (size_t j = col; j < cols; ++j) a(r, j) = f.mul(s, a(r, j));
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      uint8_t c = a(i, col);
      if (c == 0) continue;
      for (size_t j = col; j < cols; ++j) a(i, j) = f.sub(a(i, j), f.mul(c, a(r, j)));
    }
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

namespace {

constexpr uint64_t kLoLanes = 0x5555555555555555ull;

// one GF(4) scalar times a packed word of 2-bit lanes (element = lo + hi*t,
// t^2 = t + 1)
inline uint64_t gf4_scale_word(uint64_t w, uint8_t s) {
  uint64_t lo = w & kLoLanes;
  uint64_t hi = (w >> 1) & kLoLanes;
  switch (s) {
    case 1: return w;
    case 2: return hi | ((lo ^ hi) << 1);   // times t
    case 3: return (lo ^ hi) | (lo << 1);   // times t + 1
    default: return 0;
  }
}

RrefResult rref_packed2(const GfMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  const size_t wpr = (cols + 63) / 64;
  std::vector<uint64_t> w(rows * wpr, 0);
  for (size_t i = 0; i < rows; ++i) {
    const uint8_t* src = m.row_ptr(i);
    uint64_t* dst = w.data() + i * wpr;
    for (size_t c = 0; c < cols; ++c)
      if (src[c]) dst[c >> 6] |= 1ull << (c & 63);
  }

  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    const size_t wi = col >> 6;
    const uint64_t bit = 1ull << (col & 63);
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (w[i * wpr + wi] & bit) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(w.begin() + piv * wpr, w.begin() + (piv + 1) * wpr,
                       w.begin() + r * wpr);
    // rows at or below r are zero left of col, so updates start at word wi
    const uint64_t* pr = w.data() + r * wpr;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      uint64_t* ri = w.data() + i * wpr;
      if (ri[wi] & bit)
        for (size_t t = wi; t < wpr; ++t) ri[t] ^= pr[t];
    }
    pivots.push_back(col);
    ++r;
  }

  RrefResult res{GfMatrix(m.field(), rows, cols), std::move(pivots), r};
  for (size_t i = 0; i < rows; ++i) {
    const uint64_t* src = w.data() + i * wpr;
    uint8_t* dst = res.m.row_ptr(i);
    for (size_t c = 0; c < cols; ++c) dst[c] = (src[c >> 6] >> (c & 63)) & 1;
  }
  return res;
}

RrefResult rref_packed4(const GfMatrix& m) {
  const Gf& f = m.field();
  const size_t rows = m.rows(), cols = m.cols();
  const size_t wpr = (cols + 31) / 32;
  std::vector<uint64_t> w(rows * wpr, 0);
  for (size_t i = 0; i < rows; ++i) {
    const uint8_t* src = m.row_ptr(i);
    uint64_t* dst = w.data() + i * wpr;
    for (size_t c = 0; c < cols; ++c)
      dst[c >> 5] |= static_cast<uint64_t>(src[c]) << (2 * (c & 31));
  }
  auto get = [&](size_t i, size_t c) -> uint8_t {
    return (w[i * wpr + (c >> 5)] >> (2 * (c & 31))) & 3;
  };

  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    const size_t wi = col >> 5;
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (get(i, col)) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(w.begin() + piv * wpr, w.begin() + (piv + 1) * wpr,
                       w.begin() + r * wpr);
    uint64_t* pr = w.data() + r * wpr;
    uint8_t s = f.inv(get(r, col));
    if (s != 1)
      for (size_t t = wi; t < wpr; ++t) pr[t] = gf4_scale_word(pr[t], s);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      uint8_t c = get(i, col);
      if (c == 0) continue;
      uint64_t* ri = w.data() + i * wpr;
      for (size_t t = wi; t < wpr; ++t) ri[t] ^= gf4_scale_word(pr[t], c);
    }
    pivots.push_back(col);
    ++r;
  }

  RrefResult res{GfMatrix(f, rows, cols), std::move(pivots), r};
  for (size_t i = 0; i < rows; ++i) {
    uint8_t* dst = res.m.row_ptr(i);
    for (size_t c = 0; c < cols; ++c) dst[c] = get(i, c);
  }
  return res;
}

}  // namespace

RrefResult rref_packed(const GfMatrix& m) {
  const unsigned q = m.field().q();
  if (q == 2) return rref_packed2(m);
  if (q == 4) return rref_packed4(m);
  fail(Status::Internal, "packed elimination only supports q = 2 and q = 4");
}

}  // namespace detail

RrefResult rref(const GfMatrix& m) {
  if (m.rows() == 0) return RrefResult{m, {}, 0};
  if (detail::packed_available(m.field().q())) return detail::rref_packed(m);
  return detail::rref_generic(m);
}

size_t rank(const GfMatrix& m) { return rref(m).rank; }

GfMatrix null_space(const GfMatrix& m) {
  const Gf& f = m.field();
  const size_t n = m.cols();
  auto rr = rref(m);
  std::vector<char> is_pivot(n, 0);
  for (size_t p : rr.pivots) is_pivot[p] = 1;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  GfMatrix basis(f, free_cols.size(), n);
  for (size_t bi = 0; bi < free_cols.size(); ++bi) {
    const size_t fc = free_cols[bi];
    basis(bi, fc) = 1;
    for (size_t i = 0; i < rr.rank; ++i) basis(bi, rr.pivots[i]) = f.neg(rr.m(i, fc));
  }
  return basis;
}

GfMatrix row_basis(const GfMatrix& m) {
  auto rr = rref(m);
  GfMatrix r(m.field(), rr.rank, m.cols());
  for (size_t i = 0; i < rr.rank; ++i)
    std::copy(rr.m.row_ptr(i), rr.m.row_ptr(i) + m.cols(), r.row_ptr(i));
  return r;
}

GfMatrix invert(const GfMatrix& m) {
  if (m.rows() != m.cols()) fail(Status::DimensionMismatch, "only square matrices invert");
  const size_t n = m.rows();
  if (n == 0) return m;
  auto rr = rref(hstack(m, GfMatrix::identity(m.field(), n)));
  for (size_t i = 0; i < n; ++i)
    if (i >= rr.pivots.size() || rr.pivots[i] != i)
      fail(Status::Singular, "matrix is singular");
  GfMatrix out(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = rr.m(i, n + j);
  return out;
}

GfMatrix row_space_intersection(const GfMatrix& a, const GfMatrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols())
    fail(Status::DimensionMismatch, "row spaces live in different ambient spaces");
  const Gf& f = a.field();
  if (a.rows() == 0 || b.rows() == 0) return GfMatrix(f, 0, a.cols());

  // left null space of the stacked matrix: rows (u, v) with u a + v b = 0,
  // so u a runs over the intersection
  GfMatrix stacked = vstack(a, b);
  GfMatrix lns = null_space(stacked.transpose());
  GfMatrix cand(f, lns.rows(), a.cols());
  for (size_t i = 0; i < lns.rows(); ++i)
    for (size_t t = 0; t < a.rows(); ++t) {
      uint8_t u = lns(i, t);
      if (u == 0) continue;
      for (size_t j = 0; j < a.cols(); ++j)
        cand(i, j) = f.add(cand(i, j), f.mul(u, a(t, j)));
    }
  return row_basis(cand);
}

bool same_row_space(const GfMatrix& a, const GfMatrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) return false;
  return row_basis(a) == row_basis(b);
}

RowSolver::RowSolver(const GfMatrix& a) : field_(&a.field()), cols_(a.cols()) {
  const size_t m = a.rows();
  auto rr = rref(hstack(a, GfMatrix::identity(*field_, m)));
  size_t r = 0;
  while (r < rr.pivots.size() && rr.pivots[r] < cols_) ++r;
  rank_ = r;
  echelon_ = GfMatrix(*field_, r, cols_);
  transform_ = GfMatrix(*field_, r, m);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < cols_; ++j) echelon_(i, j) = rr.m(i, j);
    for (size_t j = 0; j < m; ++j) transform_(i, j) = rr.m(i, cols_ + j);
    pivots_.push_back(rr.pivots[i]);
  }
}

std::optional<GfMatrix> RowSolver::solve(const GfMatrix& b) const {
  if (&b.field() != field_) fail(Status::FieldMismatch, "solver and rhs fields differ");
  if (b.cols() != cols_) fail(Status::DimensionMismatch, "rhs column count differs");
  const Gf& f = *field_;
  GfMatrix x(f, b.rows(), transform_.cols());
  std::vector<uint8_t> coef(rank_);
  std::vector<uint8_t> recon(cols_);
  for (size_t row = 0; row < b.rows(); ++row) {
    const uint8_t* v = b.row_ptr(row);
    std::fill(recon.begin(), recon.end(), 0);
    for (size_t i = 0; i < rank_; ++i) {
      coef[i] = v[pivots_[i]];
      if (coef[i] == 0) continue;
      const uint8_t* e = echelon_.row_ptr(i);
      for (size_t j = 0; j < cols_; ++j) recon[j] = f.add(recon[j], f.mul(coef[i], e[j]));
    }
    if (!std::equal(recon.begin(), recon.end(), v)) return std::nullopt;
    for (size_t i = 0; i < rank_; ++i) {
      if (coef[i] == 0) continue;
      const uint8_t* t = transform_.row_ptr(i);
      for (size_t j = 0; j < transform_.cols(); ++j)
        x(row, j) = f.add(x(row, j), f.mul(coef[i], t[j]));
    }
  }
  return x;
}

bool RowSolver::contains_row(const uint8_t* row, size_t len) const {
  if (len != cols_) fail(Status::DimensionMismatch, "row length differs");
  const Gf& f = *field_;
  std::vector<uint8_t> recon(cols_, 0);
  for (size_t i = 0; i < rank_; ++i) {
    uint8_t c = row[pivots_[i]];
    if (c == 0) continue;
    const uint8_t* e = echelon_.row_ptr(i);
    for (size_t j = 0; j < cols_; ++j) recon[j] = f.add(recon[j], f.mul(c, e[j]));
  }
  return std::equal(recon.begin(), recon.end(), row);
}

}  // namespace addlin
