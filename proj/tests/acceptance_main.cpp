// Acceptance suite: one check per release criterion, one pass/fail line
// each. Run with no arguments for the full suite or with a criterion
// number to run a single one. Exits nonzero if any executed check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "f2watch/ams_sketch.hpp"
#include "f2watch/detector.hpp"
#include "f2watch/frequency_oracle.hpp"
#include "f2watch/harness.hpp"
#include "f2watch/rng.hpp"
#include "f2watch/simulator.hpp"

using namespace f2watch;

namespace {

struct LinearFit {
  double slope;
  double intercept;
  double r_squared;
};

LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double intercept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  double mean_y = sy / n;
  for (size_t i = 0; i < xs.size(); ++i) {
    double pred = slope * xs[i] + intercept;
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  return {slope, intercept, ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0};
}

std::vector<uint64_t> mixed_stream(uint64_t index, uint64_t window, uint64_t universe) {
  HostProfile profile = (index % 2 == 0)
                            ? HostProfile{HostKind::Zombie, 0, 0.95}
                            : HostProfile{HostKind::Good, 1 + index % 20, 0.0};
  return generate_stream(profile, window, {0, universe}, derive_seed(0xACCE, index));
}

// 1. Estimator unbiasedness: over 20 mixed streams (|H|=200, M=200) the
// mean of 2000 seeded estimates lies within 4 standard errors of the
// exact F2.
bool criterion_unbiasedness(std::string& detail) {
  const int seeds = 2000;
  bool ok = true;
  double worst_z = 0.0;
  for (uint64_t s = 0; s < 20; ++s) {
    auto stream = mixed_stream(s, 200, 200);
    double f2 = static_cast<double>(FrequencyVector(stream).f2());
    double sum = 0, sum_sq = 0;
    for (int seed = 0; seed < seeds; ++seed) {
      AmsSketch sketch(4, derive_seed(0xBEA7, s, seed));
      for (uint64_t h : stream) sketch.update(h);
      double est = sketch.estimate_f2();
      sum += est;
      sum_sq += est * est;
    }
    double mean = sum / seeds;
    double var = (sum_sq - sum * sum / seeds) / (seeds - 1);
    double se = std::sqrt(var / seeds);
    double z = std::abs(mean - f2) / se;
    worst_z = std::max(worst_z, z);
    if (z > 4.0) ok = false;
  }
  std::ostringstream out;
  out << "worst |mean-F2|/SE = " << worst_z << " (limit 4)";
  detail = out.str();
  return ok;
}

// 2. Concentration at d = required_depth(0.5, 0.25) = 32: empirical
// failure fraction of |est - F2| > 0.5*F2 over 2000 trials per stream
// stays <= 0.27.
bool criterion_concentration(std::string& detail) {
  const double epsilon = 0.5, delta = 0.25;
  const uint64_t depth = AmsSketch::required_depth(epsilon, delta);
  const int trials = 2000;
  bool ok = (depth == 32);
  double worst = 0.0;
  for (uint64_t s = 0; s < 5; ++s) {
    auto stream = mixed_stream(s, 100, 200);
    double f2 = static_cast<double>(FrequencyVector(stream).f2());
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      AmsSketch sketch(static_cast<uint32_t>(depth), derive_seed(0xC0CE, s, t));
      for (uint64_t h : stream) sketch.update(h);
      if (std::abs(sketch.estimate_f2() - f2) > epsilon * f2) ++failures;
    }
    double fraction = static_cast<double>(failures) / trials;
    worst = std::max(worst, fraction);
    if (fraction > delta + 0.02) ok = false;
  }
  std::ostringstream out;
  out << "d=" << depth << ", worst failure fraction = " << worst << " (limit 0.27)";
  detail = out.str();
  return ok;
}

// 3. Exactness: a single-header window estimates M^2 with zero error for
// every depth and seed.
bool criterion_exactness(std::string& detail) {
  const uint64_t window = 50;
  for (uint32_t depth : {1u, 4u, 64u}) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      AmsSketch sketch(depth, derive_seed(0xE4AC, depth, seed));
      for (uint64_t i = 0; i < window; ++i) sketch.update(4096 + seed);
      if (sketch.estimate_f2() != static_cast<double>(window * window)) {
        detail = "estimate deviated from M^2";
        return false;
      }
    }
  }
  detail = "estimate == 2500 for d in {1,4,64}, 100 seeds each";
  return true;
}

// 4. Two independent first-occurrence counters agree on 10^4 random streams.
bool criterion_oracle_agreement(std::string& detail) {
  SplitMix64 rng(0x0AC1E);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<uint64_t> stream;
    uint64_t len = rng.next_below(150);
    uint64_t universe = 1 + rng.next_below(80);
    for (uint64_t i = 0; i < len; ++i) stream.push_back(rng.next_below(universe));
    if (table_misses(stream) != FrequencyVector(stream).f0()) {
      detail = "table_misses != F0";
      return false;
    }
  }
  detail = "table_misses == F0 on 10000 streams";
  return true;
}

// 5. Threshold-sweep replication: (a) detection rate >= 90% at tau = M for
// M in {50,100,150} with the default profiles, (b) exact threshold
// monotonicity of the per-trial confusion counts over tau = M-5..M+5.
bool criterion_tau_sweep(std::string& detail) {
  bool ok = true;
  std::ostringstream out;
  for (uint64_t window : {50ull, 100ull, 150ull}) {
    TrialConfig config;
    config.window = window;
    config.tau = static_cast<double>(window);

    auto taus = default_tau_sweep(static_cast<int64_t>(window));
    double tp_sum = 0.0;
    double oracle_tp_sum = 0.0;
    bool monotone = true;
    for (uint64_t t = 0; t < config.runs; ++t) {
      TrialResult trial = run_trial(config, derive_seed(config.master_seed, 11, t));
      tp_sum += trial.confusion.tp_rate();

      // same target evaluated on the exact unique-header oracle
      ConfusionCounts oracle_counts;
      for (const HostRecord& r : trial.records) {
        double ratio = static_cast<double>(r.f0_exact) / static_cast<double>(window);
        oracle_counts.tally(ratio >= 0.8 ? Verdict::Zombie : Verdict::Good, r.actual);
      }
      oracle_tp_sum += oracle_counts.tp_rate();

      uint64_t prev_tp = 0;
      uint64_t prev_tn = UINT64_MAX;
      for (int64_t tau : taus) {
        ConfusionCounts counts;
        for (const HostRecord& r : trial.records)
          counts.tally(classify(r.f2_estimate, static_cast<double>(tau)), r.actual);
        if (counts.tp < prev_tp || counts.tn > prev_tn) monotone = false;
        prev_tp = counts.tp;
        prev_tn = counts.tn;
      }
    }
    double tp = tp_sum / static_cast<double>(config.runs);
    double oracle_tp = oracle_tp_sum / static_cast<double>(config.runs);
    out << "M=" << window << ": sketch TP@tau=M " << tp << "% (target >=90, F0-oracle TP "
        << oracle_tp << "%), monotonicity " << (monotone ? "ok" : "VIOLATED") << "; ";
    if (tp < 90.0 || !monotone) ok = false;
  }
  detail = out.str();
  return ok;
}

// 6. Depth insensitivity: |slope| of TP rate vs d over d = 1..100 at the
// default operating point stays within 0.05 percentage points per unit d.
bool criterion_depth_insensitivity(std::string& detail) {
  TrialConfig config;
  std::vector<uint64_t> d_range;
  for (uint64_t d = 1; d <= 100; ++d) d_range.push_back(d);
  SweepResult sweep = sweep_depth(config, d_range);
  std::vector<double> xs, ys;
  for (const SweepRow& row : sweep.rows) {
    xs.push_back(static_cast<double>(row.value));
    ys.push_back(row.tp_rate);
  }
  LinearFit fit = fit_line(xs, ys);
  std::ostringstream out;
  out << "TP-vs-d slope = " << fit.slope << " pp per unit d (limit |slope| <= 0.05); TP(d=1) = "
      << ys.front() << "%, TP(d=100) = " << ys.back() << "%";
  detail = out.str();
  return std::abs(fit.slope) <= 0.05;
}

// 7. Runtime linearity: least-squares fit of sketch time vs d over
// {1, 50, 100, 250, 500} reaches R^2 >= 0.9.
bool criterion_runtime_linearity(std::string& detail) {
  TrialConfig config;
  config.runs = 5;
  std::vector<uint64_t> d_range{1, 50, 100, 250, 500};
  RuntimeResult result = measure_runtime(config, d_range);
  std::vector<double> xs, ys;
  for (const RuntimeRow& row : result.rows) {
    xs.push_back(static_cast<double>(row.index));
    ys.push_back(row.seconds);
  }
  LinearFit fit = fit_line(xs, ys);
  std::ostringstream out;
  out << "R^2 = " << fit.r_squared << " (limit >= 0.9), t(d=500)/t(d=1) = " << ys.back() / ys.front();
  detail = out.str();
  return fit.r_squared >= 0.9;
}

// 8. Hash quality: pairwise and 4-wise sign products over 10^4 seeds stay
// within 3 sigma of zero.
bool criterion_hash_quality(std::string& detail) {
  const int trials = 10000;
  const double limit = 3.0 / std::sqrt(static_cast<double>(trials));
  const uint64_t keys[4] = {12, 345, 6789, 101112};
  long long pair_sum = 0, quad_sum = 0;
  for (int t = 0; t < trials; ++t) {
    SignHash h(derive_seed(0x44A5, t));
    pair_sum += h.sign(keys[0]) * h.sign(keys[1]);
    quad_sum += h.sign(keys[0]) * h.sign(keys[1]) * h.sign(keys[2]) * h.sign(keys[3]);
  }
  double pair_mean = static_cast<double>(pair_sum) / trials;
  double quad_mean = static_cast<double>(quad_sum) / trials;
  std::ostringstream out;
  out << "|E[g(a)g(b)]| = " << std::abs(pair_mean) << ", |E[g(a)g(b)g(c)g(e)]| = "
      << std::abs(quad_mean) << " (limit " << limit << ")";
  detail = out.str();
  return std::abs(pair_mean) <= limit && std::abs(quad_mean) <= limit;
}

// 9. Controller-load sum and the inclusive attack-success boundary on a
// hand-computed table.
bool criterion_load_units(std::string& detail) {
  struct LoadCase {
    std::vector<uint64_t> misses;
    uint64_t expected_load;
    uint64_t capacity;
    bool expected_success;
  };
  const std::vector<LoadCase> cases = {
      {{3, 5}, 8, 10, false},
      {{3, 5}, 8, 8, true},
      {{}, 0, 1, false},
      {{0, 0, 0, 0, 0}, 0, 5, false},
      {{1}, 1, 1, true},
      {{1}, 1, 2, false},
      {{10, 2}, 12, 10, true},
      {{10, 2}, 12, 12, true},
      {{10, 2}, 12, 13, false},
      {{100, 200, 300}, 600, 600, true},
      {{100, 200, 300}, 600, 601, false},
      {{7, 7, 7}, 21, 20, true},
      {{7, 7, 7}, 21, 22, false},
      {{50}, 50, 49, true},
      {{50}, 50, 51, false},
      {{1, 2, 3, 4}, 10, 10, true},
      {{1, 2, 3, 4}, 10, 11, false},
      {{9, 1}, 10, 10, true},
      {{0, 25}, 25, 26, false},
      {{0, 25}, 25, 25, true},
  };
  for (size_t i = 0; i < cases.size(); ++i) {
    const LoadCase& c = cases[i];
    if (controller_load(c.misses) != c.expected_load ||
        attack_successful(c.expected_load, c.capacity) != c.expected_success) {
      detail = "case " + std::to_string(i) + " mismatched";
      return false;
    }
  }
  detail = "20 hand-computed cases matched";
  return true;
}

// 10. Determinism: two identical full tau sweeps emit byte-identical CSV.
bool criterion_determinism(std::string& detail) {
  TrialConfig config;
  config.master_seed = 0x5EED;
  std::string first = to_csv(sweep_tau(config));
  std::string second = to_csv(sweep_tau(config));
  detail = first == second ? "byte-identical CSV across two full sweeps"
                           : "CSV outputs differ";
  return first == second;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "estimator unbiasedness", criterion_unbiasedness},
      {2, "estimator concentration at d=32", criterion_concentration},
      {3, "exactness on single-header windows", criterion_exactness},
      {4, "table-miss / F0 oracle agreement", criterion_oracle_agreement},
      {5, "tau-sweep detection rate and monotonicity", criterion_tau_sweep},
      {6, "depth insensitivity of TP rate", criterion_depth_insensitivity},
      {7, "runtime linearity in depth", criterion_runtime_linearity},
      {8, "4-wise hash moment quality", criterion_hash_quality},
      {9, "controller load and attack boundary", criterion_load_units},
      {10, "byte-identical sweep reproducibility", criterion_determinism},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = false;
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s :: %s (%.1fs)\n", passed ? "PASS" : "FAIL",
                criterion.id, criterion.name, detail.c_str(), seconds);
    std::fflush(stdout);
    if (!passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
