#include "f2watch/simulator.hpp"

#include <unordered_set>

#include "f2watch/frequency_oracle.hpp"
#include "f2watch/rng.hpp"

namespace f2watch {

namespace {

// Seed lanes inside a trial.
constexpr uint64_t kLaneAttackers = 1;
constexpr uint64_t kLaneStream = 2;
constexpr uint64_t kLaneSketch = 3;

}  // namespace

void TrialConfig::validate() const {
  if (num_hosts == 0) throw ConfigError("config: hosts must be >= 1");
  if (depth == 0) throw ConfigError("config: hash_functions must be >= 1");
  if (num_switches == 0) throw ConfigError("config: switches must be >= 1");
  if (num_headers == 0) throw ConfigError("config: headers must be >= 1");
  if (num_attackers > num_hosts) throw ConfigError("config: attackers must be <= hosts");
  if (window == 0) throw ConfigError("config: packets must be >= 1");
  if (!(tau > 0.0)) throw ConfigError("config: tau must be positive");
  if (runs == 0) throw ConfigError("config: runs must be >= 1");
  if (!(p_unique >= 0.0 && p_unique <= 1.0)) throw ConfigError("config: p_unique must be in [0,1]");
  if (num_headers / num_switches == 0)
    throw ConfigError("config: headers must be >= switches (each switch needs a nonempty header slice)");
}

Topology build_topology(const TrialConfig& config) {
  Topology topo;
  topo.controller_capacity = config.effective_controller_capacity();
  topo.switches.resize(config.num_switches);
  uint64_t slice = config.num_headers / config.num_switches;
  for (uint64_t s = 0; s < config.num_switches; ++s) {
    topo.switches[s].buffer_capacity = config.window;
    topo.switches[s].headers = HeaderRange{s * slice, slice};
  }
  for (uint64_t h = 0; h < config.num_hosts; ++h)
    topo.switches[h % config.num_switches].hosts.push_back(h);
  return topo;
}

std::vector<uint64_t> generate_stream(const HostProfile& profile, uint64_t window,
                                      HeaderRange universe, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<uint64_t> stream;
  stream.reserve(window);

  if (profile.kind == HostKind::Good) {
    if (profile.pool_size == 0) throw std::invalid_argument("generate_stream: pool_size must be >= 1");
    if (profile.pool_size > universe.size)
      throw std::invalid_argument("generate_stream: pool_size exceeds the header universe");
    IndexSampler sampler(universe.size);
    std::vector<uint64_t> pool;
    pool.reserve(profile.pool_size);
    for (uint64_t i = 0; i < profile.pool_size; ++i) pool.push_back(universe.base + sampler.draw(rng));
    for (uint64_t i = 0; i < window; ++i)
      stream.push_back(pool[rng.next_below(pool.size())]);
    return stream;
  }

  // Zombie: fresh header with probability p_unique (always fresh on the
  // first packet), otherwise repeat a uniformly chosen used one.
  IndexSampler sampler(universe.size);
  std::vector<uint64_t> used;
  used.reserve(window);
  for (uint64_t i = 0; i < window; ++i) {
    bool fresh = used.empty() || rng.next_double() < profile.p_unique;
    if (fresh) {
      if (sampler.remaining() == 0)
        throw std::out_of_range("generate_stream: header universe exhausted");
      uint64_t h = universe.base + sampler.draw(rng);
      used.push_back(h);
      stream.push_back(h);
    } else {
      stream.push_back(used[rng.next_below(used.size())]);
    }
  }
  return stream;
}

uint64_t table_misses(std::span<const uint64_t> stream) {
  std::unordered_set<uint64_t> installed;
  uint64_t misses = 0;
  for (uint64_t h : stream)
    if (installed.insert(h).second) ++misses;
  return misses;
}

uint64_t controller_load(std::span<const uint64_t> per_switch_misses) {
  uint64_t load = 0;
  for (uint64_t m : per_switch_misses) load += m;
  return load;
}

bool attack_successful(uint64_t load, uint64_t capacity) {
  if (capacity == 0) throw std::domain_error("attack_successful: capacity must be positive");
  return capacity <= load;
}

TrialResult run_trial(const TrialConfig& config, uint64_t trial_seed) {
  config.validate();
  Topology topo = build_topology(config);

  // Attackers drawn uniformly without replacement from all hosts.
  std::vector<bool> is_zombie(config.num_hosts, false);
  {
    SplitMix64 rng(derive_seed(trial_seed, kLaneAttackers));
    IndexSampler sampler(config.num_hosts);
    for (uint64_t i = 0; i < config.num_attackers; ++i) is_zombie[sampler.draw(rng)] = true;
  }

  TrialResult result;
  result.records.reserve(config.num_hosts);
  std::vector<std::vector<uint64_t>> streams(config.num_hosts);

  for (uint64_t host = 0; host < config.num_hosts; ++host) {
    const SwitchRecord& sw = topo.switches[host % config.num_switches];
    HostProfile profile;
    if (is_zombie[host]) {
      profile = HostProfile{HostKind::Zombie, 0, config.p_unique};
    } else {
      profile = HostProfile{HostKind::Good, config.effective_pool_size(), 0.0};
    }
    streams[host] = generate_stream(profile, config.window, sw.headers,
                                    derive_seed(trial_seed, kLaneStream, host));

    HostMonitor monitor(host, static_cast<uint32_t>(config.depth),
                        derive_seed(trial_seed, kLaneSketch, host), config.window, config.tau);
    std::optional<WindowReport> report;
    for (uint64_t h : streams[host]) report = monitor.ingest(h);

    HostRecord record;
    record.host = host;
    record.actual = is_zombie[host] ? Verdict::Zombie : Verdict::Good;
    record.predicted = report->verdict;
    record.f2_estimate = report->f2_estimate;
    record.f0_exact = FrequencyVector(streams[host]).f0();
    result.confusion.tally(record.predicted, record.actual);
    result.records.push_back(record);
  }

  // Controller load: per-switch flow tables start empty each trial; the
  // switch sees its hosts' windows back to back.
  std::vector<uint64_t> misses;
  misses.reserve(topo.switches.size());
  for (const SwitchRecord& sw : topo.switches) {
    std::vector<uint64_t> combined;
    combined.reserve(sw.hosts.size() * config.window);
    for (uint64_t host : sw.hosts)
      combined.insert(combined.end(), streams[host].begin(), streams[host].end());
    misses.push_back(table_misses(combined));
  }
  result.controller_load = controller_load(misses);
  result.attack_successful = attack_successful(result.controller_load, topo.controller_capacity);
  return result;
}

}  // namespace f2watch
