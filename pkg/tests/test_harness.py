import json

import numpy as np
import pytest

from lorentz_bridge.harness import (
    SUITES,
    SamplingSpec,
    numeric_fields,
    render_json,
    run_all,
    sample_betas,
    sample_boost,
    sample_case1_pair,
    suite_stream,
)
from lorentz_bridge.kinematics import four_momentum, rest_frequency


def test_spec_validation():
    with pytest.raises(ValueError):
        SamplingSpec(beta_max=1.0)
    with pytest.raises(ValueError):
        SamplingSpec(n_samples=0)
    with pytest.raises(ValueError):
        SamplingSpec(mass_range=(2.0, 1.0))
    with pytest.raises(ValueError):
        SamplingSpec(axes=("w",))
    with pytest.raises(ValueError):
        SamplingSpec(seed=-1)


def test_zero_beta_max_gives_identity():
    spec = SamplingSpec(beta_max=0.0)
    rng = suite_stream(1, "x")
    for _ in range(10):
        assert sample_boost(rng, spec).gamma() == 1.0


def test_streams_are_reproducible():
    spec = SamplingSpec()
    a = sample_betas(suite_stream(7, "s"), spec, 100)
    b = sample_betas(suite_stream(7, "s"), spec, 100)
    c = sample_betas(suite_stream(8, "s"), spec, 100)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_rapidity_mode_stays_in_bounds():
    spec = SamplingSpec(beta_max=0.999, beta_mode="rapidity")
    b = sample_betas(suite_stream(3, "r"), spec, 10_000)
    assert np.all(np.abs(b) <= 0.999)
    # heavier tails near |beta| -> 1 than uniform sampling
    u = sample_betas(suite_stream(3, "r"), SamplingSpec(beta_max=0.999), 10_000)
    assert np.mean(np.abs(b) > 0.9) > np.mean(np.abs(u) > 0.9)


def test_case1_pairs_are_on_shell():
    spec = SamplingSpec()
    rng = suite_stream(5, "pairs")
    for _ in range(200):
        particle, wave = sample_case1_pair(rng, spec)
        p = four_momentum(particle)
        assert p.norm_sq() == pytest.approx(particle.m0**2, rel=1e-12)
        assert wave.physical
        assert rest_frequency(wave) > 0


def test_smoke_all_suites_present():
    report = run_all(SamplingSpec(seed=42, n_samples=1))
    names = {v.suite_name for v in report.verdicts}
    for expected in ("theorem-a", "theorem-b-case1", "theorem-b-case4", "lemma", "ashby-miller",
                     "einstein", "proportionality", "mass-shell", "wave-shell", "phase-harmony",
                     "kinematic-identities"):
        assert expected in names


def test_default_run_passes():
    report = run_all(SamplingSpec(seed=1, n_samples=2000))
    assert report.overall_pass, [v.to_dict() for v in report.verdicts if not v.passed]


def test_determinism_byte_identical():
    spec = SamplingSpec(seed=42, n_samples=500)
    a = render_json(numeric_fields(run_all(spec).to_dict()))
    b = render_json(numeric_fields(run_all(spec).to_dict()))
    assert a == b


def test_conjunction_law():
    report = run_all(SamplingSpec(seed=3, n_samples=50))
    assert report.overall_pass
    report.verdicts[2].passed = False
    assert not report.overall_pass
    assert report.to_dict()["overall_pass"] is False


def test_verifier_errors_become_failed_verdicts(monkeypatch):
    def boom(ctx):
        raise RuntimeError("kaput")

    monkeypatch.setitem(SUITES, "einstein", boom)
    report = run_all(SamplingSpec(seed=3, n_samples=10), suites="all")
    v = report.verdict("einstein")
    assert not v.passed and "kaput" in v.note
    assert report.verdict("theorem-a").passed


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_all(SamplingSpec(), suites=("nope",))


def test_json_rendering_uses_17_digits():
    text = render_json({"a": 0.1, "b": [1, 2.5], "c": None, "d": True})
    data = json.loads(text)
    assert "0.10000000000000001" in text
    assert data == {"a": 0.1, "b": [1, 2.5], "c": None, "d": True}


def test_report_json_roundtrips():
    report = run_all(SamplingSpec(seed=9, n_samples=20), perturb=0.1)
    data = json.loads(render_json(report.to_dict()))
    assert data["overall_pass"] is False
    failed = [v for v in data["verdicts"] if not v["pass"]]
    assert failed and all(v["witness"] is not None for v in failed)
    assert set(data) == {"version", "config", "verdicts", "overall_pass", "wall_time"}
