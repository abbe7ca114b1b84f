#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "f2watch/ams_sketch.hpp"
#include "f2watch/verdict.hpp"

namespace f2watch {

// Zombie iff the F2 estimate is at or below tau (inclusive). An all-unique
// window has F2 = M while a repetitive one has F2 >> M, so tau near M
// separates the two regimes.
inline Verdict classify(double f2_estimate, double tau) {
  return f2_estimate <= tau ? Verdict::Zombie : Verdict::Good;
}

// The 11 thresholds M-5 .. M+5 swept in the accuracy experiments.
inline std::vector<int64_t> default_tau_sweep(int64_t window) {
  if (window <= 5) throw std::domain_error("default_tau_sweep: window must be > 5");
  std::vector<int64_t> taus;
  taus.reserve(11);
  for (int64_t t = window - 5; t <= window + 5; ++t) taus.push_back(t);
  return taus;
}

struct WindowReport {
  uint64_t window_index;
  double f2_estimate;
  Verdict verdict;
};

// Per-host tumbling window: one verdict every `window` packets, then the
// sketch is reset. Single writer per monitor; distinct monitors are
// independent.
class HostMonitor {
 public:
  HostMonitor(uint64_t host, uint32_t depth, uint64_t sketch_seed, uint64_t window, double tau)
      : host_(host), sketch_(depth, sketch_seed), window_(window), tau_(tau) {
    if (window == 0) throw std::invalid_argument("HostMonitor: window must be >= 1");
    if (!(tau > 0.0)) throw std::invalid_argument("HostMonitor: tau must be positive");
  }

  // Verdict emission and reset are atomic with the window-closing packet.
  std::optional<WindowReport> ingest(uint64_t header) {
    sketch_.update(header);
    if (sketch_.packets_seen() < window_) return std::nullopt;
    WindowReport report{windows_closed_, sketch_.estimate_f2(), Verdict::Good};
    report.verdict = classify(report.f2_estimate, tau_);
    sketch_.reset();
    ++windows_closed_;
    return report;
  }

  uint64_t host() const { return host_; }
  uint64_t window() const { return window_; }
  double tau() const { return tau_; }
  uint64_t packets_in_window() const { return sketch_.packets_seen(); }
  uint64_t windows_closed() const { return windows_closed_; }

 private:
  uint64_t host_;
  AmsSketch sketch_;
  uint64_t window_;
  double tau_;
  uint64_t windows_closed_ = 0;
};

// TP/TN/FP/FN tallies with Zombie as the positive class.
struct ConfusionCounts {
  uint64_t tp = 0;
  uint64_t tn = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;

  void tally(Verdict predicted, Verdict actual) {
    if (actual == Verdict::Zombie) {
      predicted == Verdict::Zombie ? ++tp : ++fn;
    } else {
      predicted == Verdict::Good ? ++tn : ++fp;
    }
  }

  uint64_t total() const { return tp + tn + fp + fn; }

  double tp_rate() const {
    if (tp + fn == 0) throw std::domain_error("ConfusionCounts::tp_rate: no actual positives");
    return 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fn);
  }

  double tn_rate() const {
    if (tn + fp == 0) throw std::domain_error("ConfusionCounts::tn_rate: no actual negatives");
    return 100.0 * static_cast<double>(tn) / static_cast<double>(tn + fp);
  }

  bool operator==(const ConfusionCounts&) const = default;
};

}  // namespace f2watch
