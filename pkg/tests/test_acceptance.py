"""Acceptance gate: every property suite at full volume, zero tolerance.

Each test runs one suite through the same entry point the command line
uses and demands an empty failure list.  Volumes are the suite defaults
(500 universal simulations, 1000 structural-invariant circuits, and so
on); equality checks are exact throughout, no tolerances anywhere.
"""

import sys

from cckit.verify import run_suite


def _gate(name, cases=None, seed=1):
    report = run_suite(name, cases, seed)
    verdict = "PASS" if report.passed else "FAIL"
    sys.stdout.write(f"{report.suite}: {verdict} ({report.cases} cases)\n")
    if report.failures:
        idx, text = report.failures[0]
        sys.stdout.write(f"first counterexample (case {idx}):\n{text}\n")
    assert report.failures == (), f"{name} had {len(report.failures)} failures"
    return report


def test_golden_fixtures_reproduce_exactly():
    _gate("golden-fixtures")


def test_universal_circuit_simulation():
    _gate("universal")


def test_three_valued_lowering():
    _gate("tri-lowering")


def test_reduction_ring_equivalences():
    _gate("reduction-ring")


def test_marriage_algorithm_ladder():
    _gate("sm-ladder")


def test_feasible_pair_bijection():
    _gate("feasible-pairs")


def test_marriage_to_circuit_pipeline():
    _gate("sm-to-ccv")


def test_reachability_pebbling():
    _gate("reachability")


def test_structural_invariants():
    _gate("structural-invariants")


def test_strictification():
    _gate("strictification")


def test_format_round_trips_and_determinism():
    _gate("formats")
