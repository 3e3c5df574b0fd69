#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addlin/field.hpp"
#include "addlin/matrix.hpp"

namespace addlin {

// Default enumeration budget for minimum distance: the q^k message sweep is
// refused beyond this many codewords.
inline constexpr uint64_t kDefaultDistanceBudget = 1ull << 26;

// true when base^exp exceeds budget, computed without overflow
bool pow_exceeds(uint64_t base, size_t exp, uint64_t budget);

// An additive code over F_{q^2}: an F_q-linear subgroup of F_{q^2}^n with
// q^k elements. The generator matrix has k rows and 2n columns over F_q;
// coordinate i occupies the column pair (2i, 2i+1) holding (x_i, y_i) of
// z_i = x_i + y_i w. Construction reduces the rows to a basis, so dim() is
// always the true k. A zero code (k = 0) is representable because duals,
// hulls and shortenings can produce one; loaders reject it at the boundary.
class AdditiveCode {
 public:
  AdditiveCode(const FieldSpec& fs, size_t n, const GfMatrix& gen);

  const FieldSpec& spec() const { return spec_; }
  size_t length() const { return n_; }
  size_t dim() const { return gen_.rows(); }
  const GfMatrix& gen() const { return gen_; }

  // true when the supplied rows were dependent and got reduced
  bool reduced() const { return reduced_; }

  // the k x 2 column block of coordinate i (0-based)
  GfMatrix block(size_t i) const;

 private:
  FieldSpec spec_;
  size_t n_;
  GfMatrix gen_;
  bool reduced_;
};

// Coordinate expansion z = x + y w -> (x, y) and back.
std::vector<uint8_t> phi(const FieldSpec& fs, const std::vector<ExtElem>& z);
std::vector<ExtElem> phi_inverse(const FieldSpec& fs, const uint8_t* row,
                                 size_t len);

// Exact minimum symbol weight over all q^k - 1 nonzero codewords, by Gray
// code enumeration (bit-sliced for q = 2). Throws BudgetExceeded when q^k
//_codewords exceed the budget, and InvalidArgument on the zero code.
unsigned min_distance(const AdditiveCode& c,
                      uint64_t budget = kDefaultDistanceBudget);

struct IsLinearResult {
  bool linear = false;
  // R with R G = G (I_n kron companion) when linear
  std::optional<GfMatrix> r;
};

// Is the row space closed under coordinatewise multiplication by w, i.e. is
// the code F_{q^2}-linear as given (no coordinate transforms applied)?
IsLinearResult is_linear(const AdditiveCode& c);

// Symplectic pairing of two phi-expanded vectors: sum_i (a_i d_i - b_i c_i).
uint8_t symplectic_form(const Gf& f, const uint8_t* x, const uint8_t* y,
                        size_t len);

// Same pairing computed on the extension side:
// sum_i (x_i y_i^q - x_i^q y_i) / (w^q - w), which always lands in F_q.
uint8_t alternating_form(const FieldSpec& fs, const std::vector<ExtElem>& x,
                         const std::vector<ExtElem>& y);

// Dual under the symplectic pairing; dimension is always 2n - k.
AdditiveCode symplectic_dual(const AdditiveCode& c);

// C intersect its symplectic dual (possibly the zero code).
AdditiveCode hull(const AdditiveCode& c);

// Trivial hull? Computed both as dim(hull) == 0 and via the rank of the
// Gram matrix G J G^T; the two routes must agree.
bool is_acd(const AdditiveCode& c);

// F_{q^2}-linear code of length n given by generator rows over the
// extension; rows are reduced to an F_{q^2} basis on construction.
class LinearCodeExt {
 public:
  LinearCodeExt(const FieldSpec& fs, size_t n,
                std::vector<std::vector<ExtElem>> rows);

  const FieldSpec& spec() const { return spec_; }
  size_t length() const { return n_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<ExtElem>>& rows() const { return rows_; }
  bool reduced() const { return reduced_; }

  // phi image as an additive code with k = 2 dim(): rows phi(z), phi(w z)
  AdditiveCode to_additive() const;

 private:
  FieldSpec spec_;
  size_t n_;
  std::vector<std::vector<ExtElem>> rows_;
  bool reduced_;
};

// Hermitian LCD: rank of M conj(M)^T over F_{q^2} equals dim().
bool hermitian_lcd(const LinearCodeExt& c);

// In-place RREF over F_{q^2}; returns the pivot columns. Exposed because
// several callers need extension-side elimination.
std::vector<size_t> ext_rref(const FieldSpec& fs,
                             std::vector<std::vector<ExtElem>>& rows);

}  // namespace addlin
