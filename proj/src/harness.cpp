#include "f2watch/harness.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "f2watch/ams_sketch.hpp"
#include "f2watch/detector.hpp"
#include "f2watch/rng.hpp"

namespace f2watch {

namespace {

constexpr uint64_t kLaneTrial = 11;
constexpr uint64_t kLaneWorkload = 12;
constexpr uint64_t kLaneRuntimeSketch = 13;

// Packets in the fixed runtime workload.
constexpr uint64_t kRuntimeWorkload = 20000;

std::vector<std::vector<HostRecord>> run_score_trials(const TrialConfig& config) {
  std::vector<std::vector<HostRecord>> trials;
  trials.reserve(config.runs);
  for (uint64_t t = 0; t < config.runs; ++t)
    trials.push_back(run_trial(config, derive_seed(config.master_seed, kLaneTrial, t)).records);
  return trials;
}

SweepRow rates_at(const std::vector<std::vector<HostRecord>>& trials, uint64_t index,
                  int64_t value, double tau) {
  double tp_sum = 0.0;
  double tn_sum = 0.0;
  for (const auto& records : trials) {
    ConfusionCounts counts;
    for (const HostRecord& r : records) counts.tally(classify(r.f2_estimate, tau), r.actual);
    tp_sum += counts.tp_rate();
    tn_sum += counts.tn_rate();
  }
  double n = static_cast<double>(trials.size());
  return SweepRow{index, value, tp_sum / n, tn_sum / n};
}

uint64_t parse_u64_field(std::string_view text, uint64_t line_no, const char* key) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("config line " + std::to_string(line_no) + ": invalid integer for " + key);
  return value;
}

double parse_double_field(std::string_view text, uint64_t line_no, const char* key) {
  try {
    size_t pos = 0;
    double value = std::stod(std::string(text), &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line_no) + ": invalid number for " + key);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

SweepResult sweep_tau(const TrialConfig& config) {
  config.validate();
  auto taus = default_tau_sweep(static_cast<int64_t>(config.window));
  auto trials = run_score_trials(config);

  SweepResult result{"tau", {}};
  result.rows.reserve(taus.size());
  for (size_t i = 0; i < taus.size(); ++i)
    result.rows.push_back(rates_at(trials, i + 1, taus[i], static_cast<double>(taus[i])));
  return result;
}

SweepResult sweep_depth(const TrialConfig& config, const std::vector<uint64_t>& d_range) {
  if (d_range.empty()) throw std::invalid_argument("sweep_depth: d_range must be nonempty");
  SweepResult result{"d", {}};
  result.rows.reserve(d_range.size());
  for (size_t i = 0; i < d_range.size(); ++i) {
    TrialConfig point = config;
    point.depth = d_range[i];
    point.tau = static_cast<double>(config.window);
    point.validate();
    auto trials = run_score_trials(point);
    result.rows.push_back(
        rates_at(trials, i + 1, static_cast<int64_t>(d_range[i]), point.tau));
  }
  return result;
}

RuntimeResult measure_runtime(const TrialConfig& config, const std::vector<uint64_t>& d_range) {
  if (d_range.empty()) throw std::invalid_argument("measure_runtime: d_range must be nonempty");
  config.validate();

  std::vector<uint64_t> workload(kRuntimeWorkload);
  SplitMix64 rng(derive_seed(config.master_seed, kLaneWorkload));
  for (uint64_t& h : workload) h = rng.next();

  volatile double sink = 0.0;
  RuntimeResult result;
  result.rows.reserve(d_range.size());
  for (uint64_t d : d_range) {
    if (d == 0) throw std::invalid_argument("measure_runtime: depth must be >= 1");
    double total = 0.0;
    for (uint64_t rep = 0; rep < config.runs; ++rep) {
      AmsSketch sketch(static_cast<uint32_t>(d),
                       derive_seed(config.master_seed, kLaneRuntimeSketch, d * 1000003 + rep));
      auto start = std::chrono::steady_clock::now();
      for (uint64_t h : workload) sketch.update(h);
      sink = sink + sketch.estimate_f2();
      auto stop = std::chrono::steady_clock::now();
      total += std::chrono::duration<double>(stop - start).count();
    }
    result.rows.push_back(RuntimeRow{d, total / static_cast<double>(config.runs)});
  }
  return result;
}

TrialConfig parse_config(std::istream& in) {
  TrialConfig config;
  bool tau_set = false;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    size_t eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    std::string key(trim(view.substr(0, eq)));
    std::string_view value = trim(view.substr(eq + 1));

    if (key == "hosts") config.num_hosts = parse_u64_field(value, line_no, "hosts");
    else if (key == "hash_functions") config.depth = parse_u64_field(value, line_no, "hash_functions");
    else if (key == "switches") config.num_switches = parse_u64_field(value, line_no, "switches");
    else if (key == "headers") config.num_headers = parse_u64_field(value, line_no, "headers");
    else if (key == "attackers") config.num_attackers = parse_u64_field(value, line_no, "attackers");
    else if (key == "packets") config.window = parse_u64_field(value, line_no, "packets");
    else if (key == "tau") { config.tau = parse_double_field(value, line_no, "tau"); tau_set = true; }
    else if (key == "runs") config.runs = parse_u64_field(value, line_no, "runs");
    else if (key == "seed") config.master_seed = parse_u64_field(value, line_no, "seed");
    else if (key == "pool_size") config.pool_size = parse_u64_field(value, line_no, "pool_size");
    else if (key == "p_unique") config.p_unique = parse_double_field(value, line_no, "p_unique");
    else throw ConfigError("config line " + std::to_string(line_no) + ": unknown key \"" + key + "\"");
  }
  if (!tau_set) config.tau = static_cast<double>(config.window);
  config.validate();
  return config;
}

TrialConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  return parse_config(in);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "index," << result.value_column << ",tp,tn\n";
  char buf[128];
  for (const SweepRow& row : result.rows) {
    std::snprintf(buf, sizeof(buf), "%llu,%lld,%.2f,%.2f\n",
                  static_cast<unsigned long long>(row.index),
                  static_cast<long long>(row.value), row.tp_rate, row.tn_rate);
    out << buf;
  }
}

void write_csv(const RuntimeResult& result, std::ostream& out) {
  out << "index,runtime\n";
  char buf[128];
  for (const RuntimeRow& row : result.rows) {
    std::snprintf(buf, sizeof(buf), "%llu,%.6f\n",
                  static_cast<unsigned long long>(row.index), row.seconds);
    out << buf;
  }
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream out;
  write_csv(result, out);
  return out.str();
}

std::string to_csv(const RuntimeResult& result) {
  std::ostringstream out;
  write_csv(result, out);
  return out.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

SweepResult read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("sweep csv: missing header");
  auto header = split_fields(line);
  if (header.size() != 4 || header[0] != "index" || header[2] != "tp" || header[3] != "tn")
    throw std::runtime_error("sweep csv: bad header");
  SweepResult result{header[1], {}};
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 4) throw std::runtime_error("sweep csv: bad row");
    result.rows.push_back(SweepRow{std::stoull(fields[0]), std::stoll(fields[1]),
                                   std::stod(fields[2]), std::stod(fields[3])});
  }
  return result;
}

RuntimeResult read_runtime_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("runtime csv: missing header");
  if (trim(line) != "index,runtime") throw std::runtime_error("runtime csv: bad header");
  RuntimeResult result;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2) throw std::runtime_error("runtime csv: bad row");
    result.rows.push_back(RuntimeRow{std::stoull(fields[0]), std::stod(fields[1])});
  }
  return result;
}

void write_trial_csv(const TrialResult& result, std::ostream& out) {
  out << "host,window,f2_estimate,predicted,actual,f0\n";
  char buf[160];
  for (const HostRecord& r : result.records) {
    std::snprintf(buf, sizeof(buf), "%llu,0,%.4f,%s,%s,%llu\n",
                  static_cast<unsigned long long>(r.host), r.f2_estimate,
                  to_string(r.predicted).data(), to_string(r.actual).data(),
                  static_cast<unsigned long long>(r.f0_exact));
    out << buf;
  }
}

}  // namespace f2watch
