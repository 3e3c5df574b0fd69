#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "addlin/gf.hpp"

namespace addlin {

// Dense matrix over a base field F_q, one byte per entry, row-major.
// Matrices with zero rows are legal (empty bases keep their column count);
// every matrix still references its field.
class GfMatrix {
 public:
  GfMatrix() : field_(nullptr), rows_(0), cols_(0) {}
  GfMatrix(const Gf& f, size_t rows, size_t cols)
      : field_(&f), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

  static GfMatrix identity(const Gf& f, size_t n);
  // Row-major entries; size must be rows*cols and every value in range.
  static GfMatrix from_rows(const Gf& f, size_t rows, size_t cols,
                            std::initializer_list<unsigned> entries);
  static GfMatrix from_rows(const Gf& f, size_t rows, size_t cols,
                            const std::vector<uint8_t>& entries);

  const Gf& field() const { return *field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  uint8_t operator()(size_t r, size_t c) const { return v_[r * cols_ + c]; }
  uint8_t& operator()(size_t r, size_t c) { return v_[r * cols_ + c]; }
  uint8_t at(size_t r, size_t c) const;

  const uint8_t* row_ptr(size_t r) const { return v_.data() + r * cols_; }
  uint8_t* row_ptr(size_t r) { return v_.data() + r * cols_; }
  const std::vector<uint8_t>& data() const { return v_; }

  GfMatrix operator+(const GfMatrix& o) const;
  GfMatrix operator-(const GfMatrix& o) const;
  GfMatrix operator*(const GfMatrix& o) const;
  bool operator==(const GfMatrix& o) const;
  bool operator!=(const GfMatrix& o) const { return !(*this == o); }

  GfMatrix scaled(uint8_t c) const;
  GfMatrix transpose() const;
  bool is_zero() const;

  // Kronecker product, blocks (i,j) = a(i,j) * b.
  GfMatrix kron(const GfMatrix& b) const;

  // Column-major vectorization as a (rows*cols) x 1 matrix.
  GfMatrix vec() const;
  static GfMatrix unvec(const GfMatrix& v, size_t rows, size_t cols);

  GfMatrix submatrix_rows(const std::vector<size_t>& idx) const;
  GfMatrix submatrix_cols(const std::vector<size_t>& idx) const;

 private:
  const Gf* field_;
  size_t rows_, cols_;
  std::vector<uint8_t> v_;

  void check_same_shape(const GfMatrix& o) const;
};

GfMatrix hstack(const GfMatrix& a, const GfMatrix& b);
GfMatrix vstack(const GfMatrix& a, const GfMatrix& b);

struct RrefResult {
  GfMatrix m;                  // reduced row echelon form
  std::vector<size_t> pivots;  // pivot column per pivot row
  size_t rank = 0;
};

// Reduced row echelon form with the first-nonzero pivot rule. Dispatches to
// a bit-packed eliminator for q = 2 and q = 4; the generic byte path covers
// the rest. Both paths produce identical output (the RREF is unique anyway,
// but the tests pin the whole struct).
RrefResult rref(const GfMatrix& m);
size_t rank(const GfMatrix& m);

namespace detail {
RrefResult rref_generic(const GfMatrix& m);
RrefResult rref_packed(const GfMatrix& m);  // requires q == 2 or q == 4
bool packed_available(unsigned q);
}  // namespace detail

// Basis of {x : m x^T = 0} as rows; 0 x cols matrix when the kernel is
// trivial. Free variables are set to 1 one at a time in increasing column
// order, so the result is deterministic.
GfMatrix null_space(const GfMatrix& m);

// Nonzero rows of the RREF.
GfMatrix row_basis(const GfMatrix& m);

// Inverse of a square matrix; throws Singular.
GfMatrix invert(const GfMatrix& m);

// Basis of rowspace(a) `intersect` rowspace(b), computed from the left null
// space of the stacked matrix. Returns a (possibly empty) basis matrix.
GfMatrix row_space_intersection(const GfMatrix& a, const GfMatrix& b);

bool same_row_space(const GfMatrix& a, const GfMatrix& b);

// Solves X * a = b row-by-row against a fixed a. Factor once, solve many.
// solve() returns nullopt when some row of b lies outside rowspace(a).
class RowSolver {
 public:
  explicit RowSolver(const GfMatrix& a);

  size_t rank() const { return rank_; }
  std::optional<GfMatrix> solve(const GfMatrix& b) const;
  bool contains_row(const uint8_t* row, size_t len) const;

 private:
  const Gf* field_;
  size_t cols_;
  size_t rank_;
  GfMatrix echelon_;           // rank x cols, nonzero rows of rref(a)
  GfMatrix transform_;         // rank x rows(a), transform_ * a == echelon_
  std::vector<size_t> pivots_; // pivot column of each echelon row
};

}  // namespace addlin
