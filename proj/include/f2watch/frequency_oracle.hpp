#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>

#include "f2watch/verdict.hpp"

namespace f2watch {

// Exact per-window header counts. Memory-unconstrained on purpose: this is
// the ground truth that the constant-space sketch is checked against, and
// the source of ground-truth host labels.
class FrequencyVector {
 public:
  FrequencyVector() = default;

  explicit FrequencyVector(std::span<const uint64_t> stream) {
    for (uint64_t h : stream) observe(h);
  }

  void observe(uint64_t header) {
    ++counts_[header];
    ++total_;
  }

  // Number of distinct headers (0^0 := 0, so the empty window counts none).
  uint64_t f0() const { return counts_.size(); }

  // Total packets in the window.
  uint64_t f1() const { return total_; }

  // Sum of squared frequencies.
  uint64_t f2() const {
    uint64_t s = 0;
    for (const auto& [header, count] : counts_) s += count * count;
    return s;
  }

  // Variance of the nonzero frequencies: F2/F0 - (F1/F0)^2.
  double variance() const {
    if (counts_.empty()) throw std::domain_error("FrequencyVector::variance: empty window");
    double n = static_cast<double>(f0());
    double mean = static_cast<double>(total_) / n;
    return static_cast<double>(f2()) / n - mean * mean;
  }

  // Zombie when the unique-header ratio F0/M reaches the threshold (inclusive).
  Verdict ground_truth_label(double ratio_threshold = 0.80) const {
    if (total_ == 0) throw std::domain_error("FrequencyVector::ground_truth_label: empty window");
    double ratio = static_cast<double>(f0()) / static_cast<double>(total_);
    return ratio >= ratio_threshold ? Verdict::Zombie : Verdict::Good;
  }

  const std::unordered_map<uint64_t, uint64_t>& counts() const { return counts_; }

 private:
  std::unordered_map<uint64_t, uint64_t> counts_;
  uint64_t total_ = 0;
};

}  // namespace f2watch
