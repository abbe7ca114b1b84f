#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace f2watch {

// SplitMix64 (Steele, Lea & Flood 2014). Used for all seed derivation and
// synthetic traffic so results are bit-identical across platforms; std::
// distributions are implementation-defined and would break that.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Rejection sampling keeps the draw exactly uniform.
  uint64_t next_below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("SplitMix64::next_below: n must be positive");
    uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    uint64_t r = next();
    while (r < threshold) r = next();
    return r % n;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

inline uint64_t mix64(uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for an independent lane of randomness.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
  return mix64(seed ^ mix64(tag + 0x9e3779b97f4a7c15ULL));
}

inline uint64_t derive_seed(uint64_t seed, uint64_t tag_a, uint64_t tag_b) {
  return derive_seed(derive_seed(seed, tag_a), tag_b);
}

// Lazy Fisher-Yates shuffle over [0, n): draws without replacement while
// storing only the displaced entries, so n can be large.
class IndexSampler {
 public:
  explicit IndexSampler(uint64_t n) : n_(n) {}

  uint64_t remaining() const { return n_ - next_; }

  uint64_t draw(SplitMix64& rng) {
    if (next_ == n_) throw std::out_of_range("IndexSampler: universe exhausted");
    uint64_t j = next_ + rng.next_below(n_ - next_);
    uint64_t value = lookup(j);
    swapped_[j] = lookup(next_);
    ++next_;
    return value;
  }

 private:
  uint64_t lookup(uint64_t i) const {
    auto it = swapped_.find(i);
    return it == swapped_.end() ? i : it->second;
  }

  uint64_t n_;
  uint64_t next_ = 0;
  std::unordered_map<uint64_t, uint64_t> swapped_;
};

}  // namespace f2watch
