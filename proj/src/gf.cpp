#include "addlin/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace addlin {

namespace {

struct PrimePower {
  unsigned p;
  unsigned e;
};

std::optional<PrimePower> factor_prime_power(unsigned q) {
  if (q < 2) return std::nullopt;
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};  // q itself is prime
  unsigned e = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, e};
}

// Fixed irreducible moduli for the supported extension orders, little-endian
// coefficients over F_p. The choice is part of the on-disk element encoding,
// so it must never change; see FORMAT.md.
std::vector<uint8_t> modulus_for(unsigned p, unsigned e) {
  if (e == 1) return {0, 1};  // the polynomial t; unused for prime fields
  if (p == 2 && e == 2) return {1, 1, 1};        // t^2 + t + 1
  if (p == 2 && e == 3) return {1, 1, 0, 1};     // t^3 + t + 1
  if (p == 2 && e == 4) return {1, 1, 0, 0, 1};  // t^4 + t + 1
  if (p == 3 && e == 2) return {1, 0, 1};        // t^2 + 1
  fail(Status::Internal, "no modulus registered for this order");
}

std::vector<uint8_t> to_digits(unsigned v, unsigned p, unsigned e) {
  std::vector<uint8_t> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = static_cast<uint8_t>(v % p);
    v /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<uint8_t>& d, unsigned p) {
  unsigned v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

Gf::Gf(unsigned q) : q_(q) {
  auto pp = factor_prime_power(q);
  if (!pp) fail(Status::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
  p_ = pp->p;
  e_ = pp->e;
  modulus_ = modulus_for(p_, e_);

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  for (unsigned a = 0; a < q; ++a) {
    auto da = to_digits(a, p_, e_);
    // negation digit-wise
    std::vector<uint8_t> dn(e_);
    for (unsigned i = 0; i < e_; ++i) dn[i] = static_cast<uint8_t>((p_ - da[i]) % p_);
    neg_[a] = static_cast<uint8_t>(from_digits(dn, p_));

    for (unsigned b = 0; b < q; ++b) {
      auto db = to_digits(b, p_, e_);

      std::vector<uint8_t> ds(e_);
      for (unsigned i = 0; i < e_; ++i) ds[i] = static_cast<uint8_t>((da[i] + db[i]) % p_);
      add_[a * q + b] = static_cast<uint8_t>(from_digits(ds, p_));

      // schoolbook product, then reduce by the monic modulus
      std::vector<uint8_t> prod(2 * e_ - 1, 0);
      for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
          prod[i + j] = static_cast<uint8_t>((prod[i + j] + da[i] * db[j]) % p_);
      for (size_t d = prod.size(); d-- > e_;) {
        unsigned c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < e_; ++i) {
          unsigned sub = (c * modulus_[i]) % p_;
          prod[d - e_ + i] = static_cast<uint8_t>((prod[d - e_ + i] + p_ - sub) % p_);
        }
      }
      prod.resize(e_);
      mul_[a * q + b] = static_cast<uint8_t>(from_digits(prod, p_));
    }
  }

  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<uint8_t>(b);
        break;
      }
}

uint8_t Gf::pow(uint8_t a, uint64_t e) const {
  uint8_t r = 1;
  uint8_t base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

const Gf& Gf::get(unsigned q) {
  if (q > kMaxBaseOrder)
    fail(Status::InvalidArgument,
         "q = " + std::to_string(q) + " exceeds the supported bound " +
             std::to_string(kMaxBaseOrder));
  if (!factor_prime_power(q))
    fail(Status::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");

  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Gf>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<Gf>(new Gf(q))).first;
  return *it->second;
}

}  // namespace addlin
