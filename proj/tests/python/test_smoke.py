"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import tdswt


def test_operator_helpers():
    a = tdswt.annihilation(4)
    assert a.shape == (4, 4)
    assert a[0, 1] == pytest.approx(1.0)
    assert a[2, 3] == pytest.approx(np.sqrt(3.0))

    n = a.conj().T @ a
    assert np.allclose(np.diag(n).real, [0, 1, 2, 3])


def test_target_unitaries_and_fidelity():
    u = tdswt.target_unitary(0.0, 0.0, 0.0)
    assert np.allclose(u, np.eye(2))

    angles = tdswt.sample_angles(7, 200)
    assert angles.shape == (200, 3)
    assert np.all((angles >= 0) & (angles < 2 * np.pi))

    for phi1, phi2, theta in angles[:20]:
        v = tdswt.target_unitary(phi1, phi2, theta)
        assert abs(np.linalg.det(v) - 1.0) < 1e-12
        assert tdswt.gate_fidelity(v, v) == pytest.approx(1.0)


def test_default_experiment_evolution():
    exp = tdswt.Experiment()
    u1, defect, convergence = exp.evolve("full", 1024)
    assert u1.shape == (2, 2)
    assert defect < 1e-9
    assert convergence < 1e-4
    assert tdswt.unitarity_defect(u1) < 1e-9

    u2, _, _ = exp.evolve("no-sdot", 1024)
    # the lambda-dot terms are a small correction, not a no-op
    diff = np.abs(u1 - u2).max()
    assert 0 < diff < 1e-2


def test_static_limit():
    text = tdswt.default_config().replace("amplitude = 60 mphi0", "amplitude = 0 mphi0")
    exp = tdswt.Experiment(text)
    u1, _, _ = exp.evolve("full", 512)
    u2, _, _ = exp.evolve("no-sdot", 512)
    u3, _, _ = exp.evolve("constant", 512)
    assert np.abs(u1 - u2).max() < 1e-12
    assert np.abs(u1 - u3).max() < 1e-12


def test_trace_and_adiabaticity():
    exp = tdswt.Experiment()
    tr = exp.trace(256)
    assert len(tr["t"]) == 257
    for key in ("phi", "phi_dot", "omega", "g_r", "g_i"):
        assert np.all(np.isfinite(tr[key]))
    assert np.abs(tr["phi"]).max() == pytest.approx(0.060, rel=1e-9)

    rep = exp.adiabaticity(256)
    assert rep["ok"]
    assert rep["max_lambda"] < 0.3


def test_magnus_summary_and_analytic_df():
    exp = tdswt.Experiment()
    s = exp.magnus(2048)
    assert set(s) >= {"omega_bar", "gr_bar", "gi_bar", "k1", "k2", "mean_dF"}
    assert s["k1"] > 0 and s["k2"] > 0
    assert 1e-5 < s["mean_dF"] < 1e-2

    df = exp.analytic_delta_f(0.3, 1.1, 2.0)
    assert np.isfinite(df)
    assert abs(df) < 1.0


def test_run_stats_determinism():
    exp = tdswt.Experiment()
    a = exp.run_stats(n_targets=300, seed=11)
    b = exp.run_stats(n_targets=300, seed=11)
    assert np.array_equal(a["dF12"], b["dF12"])
    assert np.all((a["F1"] >= 0) & (a["F1"] <= 1))
    med = np.median(np.abs(a["dF12"]))
    assert 1e-5 < med < 1e-2
