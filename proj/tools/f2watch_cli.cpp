#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "f2watch/harness.hpp"
#include "f2watch/rng.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  // Overrides; CLI11 counts tell us which were given.
  uint64_t hosts = 0, hash_functions = 0, switches = 0, headers = 0;
  uint64_t attackers = 0, packets = 0, runs = 0, seed = 0, pool_size = 0;
  double tau = 0.0, p_unique = 0.0;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Config file (flat key=value)");
  cmd->add_option("--out", opts.out_path, "Output CSV path (default: stdout)");
  cmd->add_option("--hosts", opts.hosts, "Number of hosts");
  cmd->add_option("--hash-functions", opts.hash_functions, "Sketch depth d");
  cmd->add_option("--switches", opts.switches, "Number of switches");
  cmd->add_option("--headers", opts.headers, "Header universe size");
  cmd->add_option("--attackers", opts.attackers, "Number of zombie hosts");
  cmd->add_option("--packets", opts.packets, "Window size M");
  cmd->add_option("--tau", opts.tau, "Detection threshold");
  cmd->add_option("--runs", opts.runs, "Trials to average per sweep point");
  cmd->add_option("--seed", opts.seed, "Master seed");
  cmd->add_option("--pool-size", opts.pool_size, "Good-host header pool size");
  cmd->add_option("--p-unique", opts.p_unique, "Zombie fresh-header probability");
}

f2watch::TrialConfig resolve_config(const CLI::App* cmd, const CommonOptions& opts) {
  f2watch::TrialConfig config;
  if (!opts.config_path.empty()) config = f2watch::load_config(opts.config_path);
  bool tau_given = cmd->count("--tau") > 0;
  if (cmd->count("--hosts")) config.num_hosts = opts.hosts;
  if (cmd->count("--hash-functions")) config.depth = opts.hash_functions;
  if (cmd->count("--switches")) config.num_switches = opts.switches;
  if (cmd->count("--headers")) config.num_headers = opts.headers;
  if (cmd->count("--attackers")) config.num_attackers = opts.attackers;
  if (cmd->count("--packets")) {
    config.window = opts.packets;
    if (!tau_given && opts.config_path.empty()) config.tau = static_cast<double>(opts.packets);
  }
  if (tau_given) config.tau = opts.tau;
  if (cmd->count("--runs")) config.runs = opts.runs;
  if (cmd->count("--seed")) config.master_seed = opts.seed;
  if (cmd->count("--pool-size")) config.pool_size = opts.pool_size;
  if (cmd->count("--p-unique")) config.p_unique = opts.p_unique;
  config.validate();
  return config;
}

std::vector<uint64_t> make_d_range(uint64_t d_min, uint64_t d_max, uint64_t d_step) {
  if (d_min == 0 || d_step == 0 || d_max < d_min)
    throw f2watch::ConfigError("config: depth range needs 1 <= d-min <= d-max and d-step >= 1");
  std::vector<uint64_t> range;
  for (uint64_t d = d_min; d <= d_max; d += d_step) range.push_back(d);
  return range;
}

template <typename Result>
void emit(const Result& result, const std::string& out_path,
          void (*writer)(const Result&, std::ostream&)) {
  if (out_path.empty()) {
    writer(result, std::cout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  writer(result, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming F2-sketch detector for compromised SDN hosts"};
  app.require_subcommand(1);

  CommonOptions tau_opts, depth_opts, runtime_opts, trial_opts;
  uint64_t depth_min = 1, depth_max = 100, depth_step = 1;
  uint64_t runtime_min = 1, runtime_max = 500, runtime_step = 1;

  CLI::App* sweep_tau_cmd =
      app.add_subcommand("sweep-tau", "TP/TN rates over tau = M-5 .. M+5");
  add_common_options(sweep_tau_cmd, tau_opts);

  CLI::App* sweep_depth_cmd =
      app.add_subcommand("sweep-depth", "TP/TN rates over a range of sketch depths at tau = M");
  add_common_options(sweep_depth_cmd, depth_opts);
  sweep_depth_cmd->add_option("--d-min", depth_min, "Smallest depth");
  sweep_depth_cmd->add_option("--d-max", depth_max, "Largest depth");
  sweep_depth_cmd->add_option("--d-step", depth_step, "Depth stride");

  CLI::App* runtime_cmd =
      app.add_subcommand("runtime", "Wall-clock sketch time per depth on a fixed workload");
  add_common_options(runtime_cmd, runtime_opts);
  runtime_cmd->add_option("--d-min", runtime_min, "Smallest depth");
  runtime_cmd->add_option("--d-max", runtime_max, "Largest depth");
  runtime_cmd->add_option("--d-step", runtime_step, "Depth stride");

  CLI::App* trial_cmd = app.add_subcommand("trial", "Single trial with a full per-host dump");
  add_common_options(trial_cmd, trial_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep_tau_cmd->parsed()) {
      auto config = resolve_config(sweep_tau_cmd, tau_opts);
      emit(f2watch::sweep_tau(config), tau_opts.out_path, f2watch::write_csv);
    } else if (sweep_depth_cmd->parsed()) {
      auto config = resolve_config(sweep_depth_cmd, depth_opts);
      auto range = make_d_range(depth_min, depth_max, depth_step);
      emit(f2watch::sweep_depth(config, range), depth_opts.out_path, f2watch::write_csv);
    } else if (runtime_cmd->parsed()) {
      auto config = resolve_config(runtime_cmd, runtime_opts);
      auto range = make_d_range(runtime_min, runtime_max, runtime_step);
      emit(f2watch::measure_runtime(config, range), runtime_opts.out_path, f2watch::write_csv);
    } else if (trial_cmd->parsed()) {
      auto config = resolve_config(trial_cmd, trial_opts);
      auto result = f2watch::run_trial(config, f2watch::derive_seed(config.master_seed, 0));
      emit(result, trial_opts.out_path, f2watch::write_trial_csv);
      std::cerr << "tp=" << result.confusion.tp << " tn=" << result.confusion.tn
                << " fp=" << result.confusion.fp << " fn=" << result.confusion.fn
                << " controller_load=" << result.controller_load
                << " attack_successful=" << (result.attack_successful ? "true" : "false") << "\n";
    }
  } catch (const f2watch::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return 0;
}
