#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "f2watch/detector.hpp"
#include "f2watch/errors.hpp"
#include "f2watch/verdict.hpp"

namespace f2watch {

// Contiguous slice of the header universe assigned to one switch.
struct HeaderRange {
  uint64_t base = 0;
  uint64_t size = 0;
};

enum class HostKind { Good, Zombie };

// Good hosts reuse a small fixed pool of headers; zombies emit a fresh
// never-used header with probability p_unique, otherwise repeat one they
// already used.
struct HostProfile {
  HostKind kind = HostKind::Good;
  uint64_t pool_size = 1;   // good hosts only
  double p_unique = 0.95;   // zombies only
};

// Experiment parameters. Zero pool_size means "derive from the window":
// max(1, window/10).
struct TrialConfig {
  uint64_t num_hosts = 30;
  uint64_t depth = 4;
  uint64_t num_switches = 5;
  uint64_t num_headers = 5000;
  uint64_t num_attackers = 4;
  uint64_t window = 50;
  double tau = 50.0;
  uint64_t runs = 50;
  uint64_t master_seed = 1;
  uint64_t pool_size = 0;
  double p_unique = 0.95;
  // Not a sweep parameter; 0 means max(1, num_hosts*window/2).
  uint64_t controller_capacity = 0;

  uint64_t effective_pool_size() const {
    return pool_size > 0 ? pool_size : (window / 10 > 0 ? window / 10 : 1);
  }
  uint64_t effective_controller_capacity() const {
    if (controller_capacity > 0) return controller_capacity;
    uint64_t c = num_hosts * window / 2;
    return c > 0 ? c : 1;
  }

  // Throws ConfigError naming the violated invariant.
  void validate() const;
};

struct SwitchRecord {
  uint64_t buffer_capacity;    // carried for reporting, never enforced
  std::vector<uint64_t> hosts;
  HeaderRange headers;
};

struct Topology {
  uint64_t controller_capacity;
  std::vector<SwitchRecord> switches;
};

// Hosts round-robin across switches; each switch gets a disjoint
// |H|/N slice of the header universe.
Topology build_topology(const TrialConfig& config);

// M headers drawn under the profile, deterministically in the seed.
// Throws std::out_of_range when a zombie needs a fresh header and the
// universe slice is exhausted; std::invalid_argument when a good pool
// cannot fit in the slice.
std::vector<uint64_t> generate_stream(const HostProfile& profile, uint64_t window,
                                      HeaderRange universe, uint64_t seed);

// First occurrences in the stream, i.e. flow-table misses against an
// initially empty table that installs a rule per miss. Independent of
// FrequencyVector on purpose: the two must agree.
uint64_t table_misses(std::span<const uint64_t> stream);

// Total controller load: sum of per-switch miss counts.
uint64_t controller_load(std::span<const uint64_t> per_switch_misses);

// The attack succeeds when the load reaches capacity (inclusive).
bool attack_successful(uint64_t load, uint64_t capacity);

struct HostRecord {
  uint64_t host;
  Verdict actual;
  Verdict predicted;
  double f2_estimate;
  uint64_t f0_exact;

  bool operator==(const HostRecord&) const = default;
};

struct TrialResult {
  std::vector<HostRecord> records;
  ConfusionCounts confusion;
  uint64_t controller_load = 0;
  bool attack_successful = false;
};

// One full experiment trial: pick attackers, generate per-host streams,
// label from the profile, classify with the sketch detector, tally the
// confusion counts and the controller load. Pure function of
// (config, trial_seed).
TrialResult run_trial(const TrialConfig& config, uint64_t trial_seed);

}  // namespace f2watch
