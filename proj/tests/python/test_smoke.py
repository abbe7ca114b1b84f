import textwrap

import pytest

import f2watch as fw


def test_sign_hash_determinism():
    a = fw.SignHash(42)
    b = fw.SignHash(42)
    assert all(a.sign(k) == b.sign(k) for k in range(100))
    assert all(a.sign(k) in (-1, 1) for k in range(100))


def test_frequency_vector_moments():
    v = fw.FrequencyVector([1, 1, 2])
    assert (v.f0(), v.f1(), v.f2()) == (2, 3, 5)
    assert v.variance() == pytest.approx(0.25)
    assert v.ground_truth_label() == fw.Verdict.Good


def test_sketch_exact_on_single_header():
    sketch = fw.AmsSketch(depth=4, seed=7)
    for _ in range(50):
        sketch.update(1234)
    assert sketch.estimate_f2() == 2500.0
    sketch.reset()
    assert sketch.packets_seen == 0
    assert fw.AmsSketch.required_depth(0.5, 0.25) == 32


def test_monitor_emits_one_verdict_per_window():
    monitor = fw.HostMonitor(host=1, depth=4, sketch_seed=3, window=10, tau=12.0)
    reports = [monitor.ingest(h) for h in range(10)]
    assert all(r is None for r in reports[:-1])
    assert reports[-1] is not None
    assert reports[-1].verdict in (fw.Verdict.Good, fw.Verdict.Zombie)


def test_run_trial_counts():
    config = fw.TrialConfig()
    result = fw.run_trial(config, 123)
    assert len(result.records) == 30
    assert result.confusion.tp + result.confusion.fn == 4
    assert result.confusion.tn + result.confusion.fp == 26


def test_sweep_tau_shape_and_determinism():
    config = fw.TrialConfig()
    config.runs = 2
    sweep = fw.sweep_tau(config)
    assert [row.value for row in sweep.rows] == list(range(45, 56))
    assert fw.to_csv(sweep) == fw.to_csv(fw.sweep_tau(config))


def test_load_config(tmp_path):
    path = tmp_path / "exp.cfg"
    path.write_text(textwrap.dedent("""\
        packets=100
        attackers=2
    """))
    config = fw.load_config(str(path))
    assert config.window == 100
    assert config.tau == 100.0
    assert config.num_attackers == 2

    bad = tmp_path / "bad.cfg"
    bad.write_text("attackers=40\nhosts=30\n")
    with pytest.raises(fw.ConfigError):
        fw.load_config(str(bad))


def test_simulator_primitives():
    stream = fw.generate_stream(
        fw.HostProfile(fw.HostKind.Zombie, p_unique=1.0), 50, fw.HeaderRange(0, 1000), 42
    )
    assert fw.table_misses(stream) == 50
    assert fw.controller_load([3, 5]) == 8
    assert fw.attack_successful(10, 10)
    assert not fw.attack_successful(9, 10)
