"""Sweep drivers, witness construction, and the targeted parameter hunt."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from omegalab.classical import muirhead_eval
from omegalab.errors import DomainError, ParameterError
from omegalab.jack import omega_jack_eval
from omegalab.lab import (FAMILIES, WITNESS_FAMILIES, check_log_convexity,
                          check_schur_convexity, check_weak_majorization,
                          find_witness, hunt_report, hunt_violation)
from omegalab.macdonald import MacdonaldParams, lattice_point, omega_mac_eval
from omegalab.partitions import (Partition, majorizes, partitions_of,
                                 weakly_majorizes)

Q13 = dict(q=Fraction(1, 2), t=Fraction(1, 3))

REPORT_KEYS = ["command", "family", "params", "n", "max_weight", "seed",
               "pairs_checked", "samples", "violations", "near_misses",
               "skipped", "elapsed_ms", "version"]


def test_family_registry():
    assert set(WITNESS_FAMILIES) <= set(FAMILIES)
    assert "heckman-opdam" in FAMILIES
    assert "heckman-opdam" not in WITNESS_FAMILIES


def test_muirhead_sweep_passes():
    report = check_schur_convexity("muirhead", 3, 4, samples=25, seed=7)
    assert report.passed
    assert report.pairs_checked > 0
    assert report.samples == 25
    assert report.near_misses == 0 and report.skipped == 0


def test_powersum_sweeps_pass():
    assert check_schur_convexity("powersum", 3, 4, samples=20, seed=1).passed
    report = check_log_convexity("powersum", 3, 5, samples=20, seed=1)
    assert report.passed
    assert report.command == "check logconvex"


def test_jack_sweep_passes_across_theta():
    for theta in (0, Fraction(1, 2), 2, "inf"):
        report = check_schur_convexity("jack", 3, 4, samples=15, seed=3,
                                       theta=theta)
        assert report.passed, theta


def test_lattice_sweep_passes():
    report = check_schur_convexity("macdonald-lattice", 2, 4, label_bound=2,
                                   **Q13)
    assert report.passed
    # the sample count is the number of lattice labels with entries in [0, 2]:
    # (0,0), (1,0), (1,1), (2,0), (2,1), (2,2)
    assert report.samples == 6
    assert report.params["label_bound"] == 2


def test_lattice_points_satisfy_inequality_exactly():
    # spot-check the sweep's meaning at one lattice point by hand
    mp = MacdonaldParams(**Q13, n=2)
    x = lattice_point((2, 0), mp).coords
    lhs = omega_mac_eval((2, 0), mp, x)
    rhs = omega_mac_eval((1, 1), mp, x)
    assert lhs >= rhs


def test_heckman_opdam_sweep_smoke():
    report = check_schur_convexity("heckman-opdam", 2, 3, samples=4, seed=5,
                                   k=1)
    assert report.passed
    assert report.params["x_low"] == 0


def test_weak_majorization_sweep_and_necessity():
    for theta in (0, 1, "inf"):
        report = check_weak_majorization(theta, 2, 4, samples=20, seed=2)
        assert report.passed, theta
    # scaling below the all-ones point breaks weak monotonicity:
    # the containment (1,0) >= (0,0) gives 1/2 < 1 at x = (1/2, 1/2)
    assert weakly_majorizes((1, 0), (0, 0))
    value = omega_jack_eval((1, 0), 1, (Fraction(1, 2), Fraction(1, 2)))
    assert value == Fraction(1, 2) < 1
    with pytest.raises(DomainError):
        check_weak_majorization(1, 2, 4, x_low=Fraction(1, 2))


def test_report_schema_and_determinism():
    first = check_schur_convexity("muirhead", 3, 4, samples=10, seed=11)
    second = check_schur_convexity("muirhead", 3, 4, samples=10, seed=11)
    a, b = first.to_json(), second.to_json()
    assert list(a) == REPORT_KEYS
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert json.dumps(a) == json.dumps(b)
    # exact sweep parameters travel as strings
    assert a["params"]["x_low"] == "0"


def test_witness_examples():
    w = find_witness((1, 1, 0), (2, 0, 0), "muirhead")
    assert w.margin > 0
    assert muirhead_eval(w.lam, w.x) == w.lhs < w.rhs == muirhead_eval(w.mu, w.x)
    w = find_witness((1, 1), (2, 0), "jack", theta=1)
    assert w.lhs < w.rhs
    assert omega_jack_eval((1, 1), 1, w.x) == w.lhs
    w = find_witness((1, 1), (2, 0), "macdonald-lattice", **Q13)
    assert w.lhs < w.rhs
    assert "label" in w.params


def test_witness_json_shape():
    w = find_witness((1, 1), (2, 0), "muirhead")
    assert list(w.to_json()) == ["lambda", "mu", "x", "lhs", "rhs"]
    assert w.to_json()["lambda"] == [1, 1]


def test_witness_rejects_comparable_or_mismatched():
    with pytest.raises(DomainError):
        find_witness((2, 0), (1, 1), "muirhead")  # majorizing pair
    with pytest.raises(DomainError):
        find_witness((2, 0), (1, 0), "muirhead")  # unequal weights
    with pytest.raises(ParameterError):
        find_witness((1, 1), (2, 0), "nonsense")


def test_witness_complete_on_small_range():
    # every incomparable ordered pair must get a certified witness
    found = 0
    for w in range(1, 7):
        shapes = [Partition(p) for p in partitions_of(w, 3)]
        for lam in shapes:
            for mu in shapes:
                if lam.parts == mu.parts or majorizes(lam, mu) \
                        or majorizes(mu, lam):
                    continue
                for family, kw in (("muirhead", {}),
                                   ("jack", {"theta": Fraction(1, 2)}),
                                   ("macdonald-lattice", Q13)):
                    wit = find_witness(lam, mu, family, **kw)
                    assert wit.margin > 0, (lam, mu, family)
                found += 1
    assert found == 2  # (4,1,1) vs (3,3,0) in both orders, nothing below


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_witness_soundness_muirhead(seed_like):
    # re-verify a fixed witness exactly, independent of construction details
    w = find_witness((3, 3, 0), (4, 1, 1), "muirhead")
    assert muirhead_eval((3, 3, 0), w.x) < muirhead_eval((4, 1, 1), w.x)


def test_hunt_finds_violation_at_generic_parameters():
    witness, probes = hunt_violation(Fraction(1, 2), Fraction(1, 3), n=2,
                                     max_weight=6, budget=1000, seed=0)
    assert witness is not None
    assert probes <= 1000
    assert witness.lam.parts != witness.mu.parts
    assert majorizes(witness.lam, witness.mu)
    # independent exact re-verification of the reported failure
    mp = MacdonaldParams(witness.params["q"], witness.params["t"], 2,
                         a=witness.params["a"])
    lhs = omega_mac_eval(witness.lam, mp, witness.x)
    rhs = omega_mac_eval(witness.mu, mp, witness.x)
    assert lhs == witness.lhs and rhs == witness.rhs
    assert lhs < rhs


def test_hunt_on_lattice_finds_nothing():
    witness, probes = hunt_violation(Fraction(1, 2), Fraction(1, 3), n=2,
                                     max_weight=4, budget=10 ** 4, seed=0,
                                     lattice_only=True, label_bound=2)
    assert witness is None
    assert 0 < probes <= 10 ** 4


def test_hunt_respects_budget():
    witness, probes = hunt_violation(Fraction(1, 2), Fraction(1, 3), n=2,
                                     max_weight=6, budget=0, seed=0)
    assert witness is None and probes == 0


def test_hunt_report_schema():
    report = hunt_report(Fraction(1, 2), Fraction(1, 3), n=2, max_weight=6,
                         budget=500, seed=0)
    data = report.to_json()
    assert list(data) == REPORT_KEYS
    assert data["command"] == "hunt"
    assert data["params"]["mode"] == "off-lattice"
    assert not report.passed


def test_unknown_family_rejected():
    with pytest.raises(ParameterError):
        check_schur_convexity("schur-weyl", 2, 3)


def test_missing_parameters_rejected():
    with pytest.raises(ParameterError):
        check_schur_convexity("jack", 2, 3)  # no theta
    with pytest.raises(ParameterError):
        check_schur_convexity("macdonald-lattice", 2, 3, q=Fraction(1, 2))
    with pytest.raises(ParameterError):
        check_schur_convexity("heckman-opdam", 2, 3)  # no k


def test_negative_sample_window_rejected():
    with pytest.raises(DomainError):
        check_schur_convexity("muirhead", 2, 3, x_low=-1)
