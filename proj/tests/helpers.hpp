#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "addlin/field.hpp"
#include "addlin/matrix.hpp"

namespace testutil {

using addlin::ExtElem;
using addlin::FieldSpec;
using addlin::Gf;
using addlin::GfMatrix;

inline GfMatrix random_matrix(std::mt19937_64& rng, const Gf& f, size_t rows,
                              size_t cols) {
  GfMatrix m(f, rows, cols);
  std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = static_cast<uint8_t>(d(rng));
  return m;
}

inline GfMatrix random_invertible(std::mt19937_64& rng, const Gf& f, size_t n) {
  for (;;) {
    GfMatrix m = random_matrix(rng, f, n, n);
    if (addlin::rank(m) == n) return m;
  }
}

inline GfMatrix random_full_rank(std::mt19937_64& rng, const Gf& f, size_t rows,
                                 size_t cols) {
  for (;;) {
    GfMatrix m = random_matrix(rng, f, rows, cols);
    if (addlin::rank(m) == rows) return m;
  }
}

// Every vector in the row space of m, as byte strings. Only sane for
// q^rows small; used as an elimination-free oracle.
inline std::set<std::vector<uint8_t>> span_set(const GfMatrix& m) {
  const Gf& f = m.field();
  const unsigned q = f.q();
  std::set<std::vector<uint8_t>> out;
  std::vector<unsigned> coef(m.rows(), 0);
  for (;;) {
    std::vector<uint8_t> v(m.cols(), 0);
    for (size_t i = 0; i < m.rows(); ++i) {
      uint8_t c = static_cast<uint8_t>(coef[i]);
      if (c == 0) continue;
      for (size_t j = 0; j < m.cols(); ++j)
        v[j] = f.add(v[j], f.mul(c, m(i, j)));
    }
    out.insert(v);
    size_t i = 0;
    while (i < coef.size() && ++coef[i] == q) coef[i++] = 0;
    if (i == coef.size()) break;
  }
  return out;
}

inline ExtElem random_ext(std::mt19937_64& rng, const FieldSpec& fs) {
  std::uniform_int_distribution<unsigned> d(0, fs.q() - 1);
  return {static_cast<uint8_t>(d(rng)), static_cast<uint8_t>(d(rng))};
}

inline std::vector<ExtElem> all_ext(const FieldSpec& fs) {
  std::vector<ExtElem> out;
  for (unsigned a = 0; a < fs.q(); ++a)
    for (unsigned b = 0; b < fs.q(); ++b)
      out.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
  return out;
}

}  // namespace testutil
