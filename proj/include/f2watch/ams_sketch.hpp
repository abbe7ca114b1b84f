#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "f2watch/hash_family.hpp"
#include "f2watch/rng.hpp"

namespace f2watch {

// Tug-of-war sketch: d signed counters, each nudged by +-1 per packet
// according to its own 4-wise sign hash. mean(X_i^2) is an unbiased
// estimate of the window's second frequency moment. State is O(d),
// independent of the stream length and of the header universe.
class AmsSketch {
 public:
  AmsSketch(uint32_t depth, uint64_t seed) : seed_(seed) {
    if (depth == 0) throw std::invalid_argument("AmsSketch: depth must be >= 1");
    counters_.assign(depth, 0);
    hashes_.reserve(depth);
    for (uint32_t i = 0; i < depth; ++i) hashes_.emplace_back(derive_seed(seed, i));
  }

  void update(uint64_t header) {
    if (packets_seen_ == static_cast<uint64_t>(std::numeric_limits<int64_t>::max()))
      throw std::overflow_error("AmsSketch::update: counter range exhausted");
    for (size_t i = 0; i < counters_.size(); ++i) counters_[i] += hashes_[i].sign(header);
    ++packets_seen_;
  }

  // mean(X_1^2, ..., X_d^2); 0 for an empty sketch.
  double estimate_f2() const {
    double s = 0.0;
    for (int64_t x : counters_) s += static_cast<double>(x) * static_cast<double>(x);
    return s / static_cast<double>(counters_.size());
  }

  // Zero the counters but keep the hash functions, so the next window is
  // statistically identical to a fresh same-seed sketch.
  void reset() {
    counters_.assign(counters_.size(), 0);
    packets_seen_ = 0;
  }

  uint32_t depth() const { return static_cast<uint32_t>(counters_.size()); }
  uint64_t packets_seen() const { return packets_seen_; }
  uint64_t seed() const { return seed_; }
  std::span<const int64_t> counters() const { return counters_; }

  // Rows needed for Pr[|estimate - F2| > eps*F2] <= delta: ceil(2 / (eps^2 * delta)).
  static uint64_t required_depth(double epsilon, double delta) {
    if (!(epsilon > 0.0)) throw std::domain_error("required_depth: epsilon must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("required_depth: delta must be in (0,1)");
    return static_cast<uint64_t>(std::ceil(2.0 / (epsilon * epsilon * delta)));
  }

 private:
  std::vector<int64_t> counters_;
  std::vector<SignHash> hashes_;
  uint64_t packets_seen_ = 0;
  uint64_t seed_;
};

}  // namespace f2watch
