#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "f2watch/ams_sketch.hpp"
#include "f2watch/detector.hpp"
#include "f2watch/frequency_oracle.hpp"
#include "f2watch/harness.hpp"
#include "f2watch/hash_family.hpp"
#include "f2watch/rng.hpp"
#include "f2watch/simulator.hpp"

namespace py = pybind11;
using namespace f2watch;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Streaming F2-sketch detector for compromised SDN hosts";

    py::enum_<Verdict>(m, "Verdict")
        .value("Good", Verdict::Good)
        .value("Zombie", Verdict::Zombie);

    py::enum_<HostKind>(m, "HostKind")
        .value("Good", HostKind::Good)
        .value("Zombie", HostKind::Zombie);

    py::class_<SignHash>(m, "SignHash")
        .def(py::init<uint64_t>(), py::arg("seed"))
        .def("sign", &SignHash::sign, py::arg("key"))
        .def("coefficient", &SignHash::coefficient, py::arg("i"))
        .def(py::self == py::self)
        .def_readonly_static("PRIME", &SignHash::kPrime);

    py::class_<FrequencyVector>(m, "FrequencyVector")
        .def(py::init<>())
        .def(py::init([](const std::vector<uint64_t>& stream) {
                 return FrequencyVector(stream);
             }),
             py::arg("stream"))
        .def("observe", &FrequencyVector::observe, py::arg("header"))
        .def("f0", &FrequencyVector::f0)
        .def("f1", &FrequencyVector::f1)
        .def("f2", &FrequencyVector::f2)
        .def("variance", &FrequencyVector::variance)
        .def("ground_truth_label", &FrequencyVector::ground_truth_label,
             py::arg("ratio_threshold") = 0.80)
        .def_property_readonly("counts", &FrequencyVector::counts);

    py::class_<AmsSketch>(m, "AmsSketch")
        .def(py::init<uint32_t, uint64_t>(), py::arg("depth"), py::arg("seed"))
        .def("update", &AmsSketch::update, py::arg("header"))
        .def("estimate_f2", &AmsSketch::estimate_f2)
        .def("reset", &AmsSketch::reset)
        .def_property_readonly("depth", &AmsSketch::depth)
        .def_property_readonly("packets_seen", &AmsSketch::packets_seen)
        .def_property_readonly("counters",
                               [](const AmsSketch& s) {
                                   return std::vector<int64_t>(s.counters().begin(),
                                                               s.counters().end());
                               })
        .def_static("required_depth", &AmsSketch::required_depth, py::arg("epsilon"),
                    py::arg("delta"));

    m.def("classify", &classify, py::arg("f2_estimate"), py::arg("tau"));
    m.def("default_tau_sweep", &default_tau_sweep, py::arg("window"));

    py::class_<WindowReport>(m, "WindowReport")
        .def_readonly("window_index", &WindowReport::window_index)
        .def_readonly("f2_estimate", &WindowReport::f2_estimate)
        .def_readonly("verdict", &WindowReport::verdict);

    py::class_<HostMonitor>(m, "HostMonitor")
        .def(py::init<uint64_t, uint32_t, uint64_t, uint64_t, double>(), py::arg("host"),
             py::arg("depth"), py::arg("sketch_seed"), py::arg("window"), py::arg("tau"))
        .def("ingest", &HostMonitor::ingest, py::arg("header"))
        .def_property_readonly("host", &HostMonitor::host)
        .def_property_readonly("window", &HostMonitor::window)
        .def_property_readonly("tau", &HostMonitor::tau)
        .def_property_readonly("packets_in_window", &HostMonitor::packets_in_window)
        .def_property_readonly("windows_closed", &HostMonitor::windows_closed);

    py::class_<ConfusionCounts>(m, "ConfusionCounts")
        .def(py::init<>())
        .def_readwrite("tp", &ConfusionCounts::tp)
        .def_readwrite("tn", &ConfusionCounts::tn)
        .def_readwrite("fp", &ConfusionCounts::fp)
        .def_readwrite("fn", &ConfusionCounts::fn)
        .def("tally", &ConfusionCounts::tally, py::arg("predicted"), py::arg("actual"))
        .def("total", &ConfusionCounts::total)
        .def("tp_rate", &ConfusionCounts::tp_rate)
        .def("tn_rate", &ConfusionCounts::tn_rate);

    py::class_<HeaderRange>(m, "HeaderRange")
        .def(py::init([](uint64_t base, uint64_t size) {
                 return HeaderRange{base, size};
             }),
             py::arg("base"), py::arg("size"))
        .def_readwrite("base", &HeaderRange::base)
        .def_readwrite("size", &HeaderRange::size);

    py::class_<HostProfile>(m, "HostProfile")
        .def(py::init([](HostKind kind, uint64_t pool_size, double p_unique) {
                 return HostProfile{kind, pool_size, p_unique};
             }),
             py::arg("kind"), py::arg("pool_size") = 1, py::arg("p_unique") = 0.95)
        .def_readwrite("kind", &HostProfile::kind)
        .def_readwrite("pool_size", &HostProfile::pool_size)
        .def_readwrite("p_unique", &HostProfile::p_unique);

    py::class_<TrialConfig>(m, "TrialConfig")
        .def(py::init<>())
        .def_readwrite("num_hosts", &TrialConfig::num_hosts)
        .def_readwrite("depth", &TrialConfig::depth)
        .def_readwrite("num_switches", &TrialConfig::num_switches)
        .def_readwrite("num_headers", &TrialConfig::num_headers)
        .def_readwrite("num_attackers", &TrialConfig::num_attackers)
        .def_readwrite("window", &TrialConfig::window)
        .def_readwrite("tau", &TrialConfig::tau)
        .def_readwrite("runs", &TrialConfig::runs)
        .def_readwrite("master_seed", &TrialConfig::master_seed)
        .def_readwrite("pool_size", &TrialConfig::pool_size)
        .def_readwrite("p_unique", &TrialConfig::p_unique)
        .def_readwrite("controller_capacity", &TrialConfig::controller_capacity)
        .def("effective_pool_size", &TrialConfig::effective_pool_size)
        .def("effective_controller_capacity", &TrialConfig::effective_controller_capacity)
        .def("validate", &TrialConfig::validate);

    py::class_<HostRecord>(m, "HostRecord")
        .def_readonly("host", &HostRecord::host)
        .def_readonly("actual", &HostRecord::actual)
        .def_readonly("predicted", &HostRecord::predicted)
        .def_readonly("f2_estimate", &HostRecord::f2_estimate)
        .def_readonly("f0_exact", &HostRecord::f0_exact);

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("records", &TrialResult::records)
        .def_readonly("confusion", &TrialResult::confusion)
        .def_readonly("controller_load", &TrialResult::controller_load)
        .def_readonly("attack_successful", &TrialResult::attack_successful);

    m.def("generate_stream", &generate_stream, py::arg("profile"), py::arg("window"),
          py::arg("universe"), py::arg("seed"));
    m.def("table_misses",
          [](const std::vector<uint64_t>& stream) { return table_misses(stream); },
          py::arg("stream"));
    m.def("controller_load",
          [](const std::vector<uint64_t>& misses) { return controller_load(misses); },
          py::arg("per_switch_misses"));
    m.def("attack_successful", &attack_successful, py::arg("load"), py::arg("capacity"));
    m.def("run_trial", &run_trial, py::arg("config"), py::arg("trial_seed"));
    m.def("derive_seed", py::overload_cast<uint64_t, uint64_t>(&derive_seed),
          py::arg("seed"), py::arg("tag"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("index", &SweepRow::index)
        .def_readonly("value", &SweepRow::value)
        .def_readonly("tp_rate", &SweepRow::tp_rate)
        .def_readonly("tn_rate", &SweepRow::tn_rate);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("value_column", &SweepResult::value_column)
        .def_readonly("rows", &SweepResult::rows);

    py::class_<RuntimeRow>(m, "RuntimeRow")
        .def_readonly("index", &RuntimeRow::index)
        .def_readonly("seconds", &RuntimeRow::seconds);

    py::class_<RuntimeResult>(m, "RuntimeResult")
        .def_readonly("rows", &RuntimeResult::rows);

    m.def("sweep_tau", &sweep_tau, py::arg("config"));
    m.def("sweep_depth", &sweep_depth, py::arg("config"), py::arg("d_range"));
    m.def("measure_runtime", &measure_runtime, py::arg("config"), py::arg("d_range"));
    m.def("load_config", &load_config, py::arg("path"));
    m.def("to_csv", py::overload_cast<const SweepResult&>(&to_csv), py::arg("result"));
    m.def("to_csv", py::overload_cast<const RuntimeResult&>(&to_csv), py::arg("result"));
    m.def("trial_csv", [](const TrialResult& result) {
        std::ostringstream out;
        write_trial_csv(result, out);
        return out.str();
    });

    py::register_exception<ConfigError>(m, "ConfigError");
}
