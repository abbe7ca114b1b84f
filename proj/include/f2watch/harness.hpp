#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "f2watch/errors.hpp"
#include "f2watch/simulator.hpp"

namespace f2watch {

// One row of an accuracy sweep: sweep position, parameter value (tau or d),
// and TP/TN rates in percent averaged over the configured runs.
struct SweepRow {
  uint64_t index;
  int64_t value;
  double tp_rate;
  double tn_rate;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::string value_column;  // "tau" or "d"
  std::vector<SweepRow> rows;

  bool operator==(const SweepResult&) const = default;
};

struct RuntimeRow {
  uint64_t index;  // the depth d
  double seconds;

  bool operator==(const RuntimeRow&) const = default;
};

struct RuntimeResult {
  std::vector<RuntimeRow> rows;

  bool operator==(const RuntimeResult&) const = default;
};

// Accuracy vs threshold over tau = M-5 .. M+5. Runs `config.runs` trials
// once with child seeds of the master seed; every tau row reclassifies the
// same per-host scores, so threshold monotonicity is exact.
SweepResult sweep_tau(const TrialConfig& config);

// Accuracy vs sketch depth at tau = M.
SweepResult sweep_depth(const TrialConfig& config, const std::vector<uint64_t>& d_range);

// Wall-clock time to sketch a fixed synthetic workload, per depth, averaged
// over `config.runs` repetitions.
RuntimeResult measure_runtime(const TrialConfig& config, const std::vector<uint64_t>& d_range);

// Flat key=value config. Unset keys take the default experiment values;
// an empty file is a valid full-default config. Throws ConfigError with
// the offending line number on parse errors.
TrialConfig load_config(const std::string& path);
TrialConfig parse_config(std::istream& in);

// CSV, bit-stable given equal inputs. Accuracy rates carry 2 fractional
// digits, runtimes 6.
void write_csv(const SweepResult& result, std::ostream& out);
void write_csv(const RuntimeResult& result, std::ostream& out);
std::string to_csv(const SweepResult& result);
std::string to_csv(const RuntimeResult& result);
SweepResult read_sweep_csv(std::istream& in);
RuntimeResult read_runtime_csv(std::istream& in);

// Per-host dump of a single trial, one row per classification event.
void write_trial_csv(const TrialResult& result, std::ostream& out);

}  // namespace f2watch
