"""Suite assembly, the acceptance grid, and exit-status classification."""

from __future__ import annotations

import pickle

import pytest

from redouble.reports import VerificationReport
from redouble.suites import (
    SUITE_NAMES,
    SuiteConfig,
    acceptance_grid,
    exit_code_for,
    run_all,
    run_suite,
)


def test_every_registered_suite_has_a_runner():
    for name in SUITE_NAMES:
        report = None
        if name in ("braiding", "spectrum", "orbits"):
            report = run_suite(SuiteConfig(name, n=1))
            assert report.passed, name
    with pytest.raises(ValueError):
        run_suite(SuiteConfig("spectra"))


def test_braiding_suite_exact_checks():
    report = run_suite(SuiteConfig("braiding", n=3))
    assert report.passed, report.failures()
    assert [c["id"] for c in report.checks] == \
        ["braid-relation", "hecke-condition", "braiding-inverse",
         "trace-property"]


def test_braiding_suite_sampled_is_seed_reproducible():
    one = run_suite(SuiteConfig("braiding", n=2, mode="SAMPLED", seed=11))
    two = run_suite(SuiteConfig("braiding", n=2, mode="SAMPLED", seed=11))
    assert one.passed
    assert len(one.checks) == 10
    assert one.to_json() == two.to_json()
    other = run_suite(SuiteConfig("braiding", n=2, mode="SAMPLED", seed=12))
    assert [c["id"] for c in one.checks] != [c["id"] for c in other.checks]
    with pytest.raises(ValueError):
        run_suite(SuiteConfig("braiding", n=2, mode="APPROX"))


def test_heckerep_suite_checks():
    report = run_suite(SuiteConfig("heckerep", n=2, k=2))
    assert report.passed, report.failures()
    assert [c["id"] for c in report.checks] == [
        "jm-commutativity", "skew-idempotent", "skew-absorption",
        "skew-rank-top", "skew-vanish-above", "projector-complete",
        "projector-orthogonal", "projector-jm-eigenvalue",
        "projector-classical-rank"]


def test_doubles_suite_covers_every_kind():
    report = run_suite(SuiteConfig("doubles", n=2, seed=5))
    assert report.passed, report.failures()
    ids = [c["id"] for c in report.checks]
    assert len(ids) == 28
    for kind in ("left", "left_shifted", "adjoint", "adjoint_shifted",
                 "derivative", "derivative_shifted", "vector"):
        assert f"construction-{kind}" in ids
        assert f"unit-action-{kind}" in ids
        assert f"representation-{kind}" in ids
        assert f"ideal-compatibility-{kind}" in ids


def test_spectrum_suite_pins_rank_two_closed_forms():
    for shape, chi in (((1,), "(q^4+1)/(q^5)"),
                       ((2,), "(q^6+1)/(q^7)"),
                       ((1, 1), "(q^2+1)/(q^5)")):
        report = run_suite(SuiteConfig("spectrum", n=2, shape=shape))
        assert report.passed, report.failures()
        assert report.config["chi"] == chi
        assert report.checks[-1]["id"] == "closed-form"
    away = run_suite(SuiteConfig("spectrum", n=3, shape=(1, 1)))
    assert away.passed
    assert all(c["id"] != "closed-form" for c in away.checks)


def test_conjecture_suite_merges_both_probes():
    report = run_suite(SuiteConfig("conjecture", n=2))
    assert report.passed, report.failures()
    ids = [c["id"] for c in report.checks]
    assert any(i.startswith("e1-") for i in ids)
    assert any(i.startswith("e2-2-") for i in ids)
    assert any(i.startswith("e2-2,1-") for i in ids)


def test_capelli_suite_runs_both_routes():
    report = run_suite(SuiteConfig("capelli", n=2, k=1))
    assert report.passed, report.failures()
    assert [c["id"] for c in report.checks] == ["word-route", "action-route"]


def test_sampled_suites_record_the_seed():
    report = run_suite(SuiteConfig("cayley-hamilton", n=2, mode="SAMPLED",
                                   seed=9))
    assert report.passed, report.failures()
    assert report.config["seed"] == 9
    assert len(report.checks) == 3


def test_u2h_suite_aggregates_all_layers():
    report = run_suite(SuiteConfig("u2h", seed=3))
    assert report.passed, report.failures()
    ids = [c["id"] for c in report.checks]
    assert len(ids) == 53
    for expected in ("commutativity", "unit", "random-19", "bracket-zx",
                     "radius-square", "first-order-actions",
                     "substitution-consistency", "coproduct-route"):
        assert expected in ids


def test_configs_are_picklable():
    cfg = SuiteConfig("capelli", n=2, k=2, shape=(2, 1), mode="SAMPLED",
                      samples=4, seed=17)
    clone = pickle.loads(pickle.dumps(cfg))
    assert clone.suite == cfg.suite and clone.shape == cfg.shape
    assert clone.rng().random() == cfg.rng().random()


def test_acceptance_grid_shape():
    grid = acceptance_grid()
    labels = [label for label, _ in grid]
    assert len(labels) == len(set(labels)) == 39
    assert labels[0] == "braiding-n1"
    assert "spectrum-n3-2,1" in labels
    assert labels[-1] == "u2h"
    sampled = dict(acceptance_grid(mode="SAMPLED"))
    assert sampled["capelli-n2-k1"].mode == "SAMPLED"
    assert sampled["cayley-hamilton-n3"].mode == "SAMPLED"
    with pytest.raises(ValueError):
        acceptance_grid(mode="FAST")


def test_run_all_parallel_matches_serial():
    serial = run_all(seed=2)
    parallel = run_all(seed=2, jobs=2)
    assert serial.passed, serial.failures()
    assert serial.to_json() == parallel.to_json()


def test_exit_code_classification():
    good = VerificationReport("capelli")
    good.add("word-route", "x", True)
    assert exit_code_for(good) == 0

    hard = VerificationReport("capelli")
    hard.add("word-route", "x", False)
    assert exit_code_for(hard) == 1

    probe = VerificationReport("conjecture")
    probe.add("e2-2-tableau-1", "x", False)
    assert exit_code_for(probe) == 2

    summary = VerificationReport("all")
    summary.add("conjecture-n2", "grid", False)
    summary.add("capelli-n2-k1", "grid", True)
    assert exit_code_for(summary) == 2
    summary.add("capelli-n2-k2", "grid", False)
    assert exit_code_for(summary) == 1
