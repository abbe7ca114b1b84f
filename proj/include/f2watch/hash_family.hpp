#pragma once

#include <cstdint>

#include "f2watch/rng.hpp"

namespace f2watch {

// One member of a 4-wise independent family of sign hashes: a degree-3
// polynomial over GF(p), p = 2^61 - 1, with the sign read off the low bit
// of the result. Immutable after construction; safe to share across threads.
class SignHash {
 public:
  static constexpr uint64_t kPrime = (1ULL << 61) - 1;

  explicit SignHash(uint64_t seed) {
    SplitMix64 rng(seed);
    for (auto& c : coeff_) c = rng.next() % kPrime;
  }

  // +1 or -1; keys at or above p are reduced mod p first.
  int sign(uint64_t key) const {
    uint64_t k = key >= kPrime ? key % kPrime : key;
    uint64_t v = coeff_[3];
    v = add_mod(mul_mod(v, k), coeff_[2]);
    v = add_mod(mul_mod(v, k), coeff_[1]);
    v = add_mod(mul_mod(v, k), coeff_[0]);
    return (v & 1) ? +1 : -1;
  }

  uint64_t coefficient(int i) const { return coeff_[i]; }

  bool operator==(const SignHash&) const = default;

 private:
  // a*b mod 2^61-1 via the Mersenne identity 2^61 = 1 (mod p).
  static uint64_t mul_mod(uint64_t a, uint64_t b) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    uint64_t lo = static_cast<uint64_t>(prod) & kPrime;
    uint64_t hi = static_cast<uint64_t>(prod >> 61);
    uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
  }

  static uint64_t add_mod(uint64_t a, uint64_t b) {
    uint64_t s = a + b;  // both < 2^61, cannot wrap
    return s >= kPrime ? s - kPrime : s;
  }

  uint64_t coeff_[4];
};

}  // namespace f2watch
