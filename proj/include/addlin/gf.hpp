#pragma once

#include <cstdint>
#include <vector>

#include "addlin/error.hpp"

namespace addlin {

// Largest supported base field order. Small on purpose: elements fit in a
// byte and full multiplication tables stay tiny.
inline constexpr unsigned kMaxBaseOrder = 16;

// The finite field F_q for a prime power q <= 16. Elements are the integers
// 0..q-1, read as base-p digit vectors (little-endian) over a fixed
// irreducible modulus, so 0 and 1 are always the additive and multiplicative
// identities and integer value p encodes the residue of t, the adjoined root.
// All arithmetic is table lookups built once per order.
//
// Instances are interned: Gf::get(q) hands out a reference that stays valid
// for the lifetime of the process, which lets matrices hold a plain pointer.
class Gf {
 public:
  static const Gf& get(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned degree() const { return e_; }

  // Modulus polynomial of the representation, little-endian coefficients
  // over F_p including the leading 1. For prime q this is just {0, 1}
  // shifted, i.e. the polynomial t.
  const std::vector<uint8_t>& modulus() const { return modulus_; }

  bool valid(uint8_t a) const { return a < q_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }

  // Multiplicative inverse; a must be nonzero.
  uint8_t inv(uint8_t a) const {
    if (a == 0) fail(Status::Singular, "inverse of zero in F_q");
    return inv_[a];
  }

  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

  uint8_t pow(uint8_t a, uint64_t e) const;

  // Checked accessor used by parsers; rejects out-of-range bytes.
  uint8_t check(unsigned v) const {
    if (v >= q_) fail(Status::InvalidArgument, "value out of field range");
    return static_cast<uint8_t>(v);
  }

  Gf(const Gf&) = delete;
  Gf& operator=(const Gf&) = delete;

 private:
  explicit Gf(unsigned q);

  unsigned q_, p_, e_;
  std::vector<uint8_t> modulus_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace addlin
