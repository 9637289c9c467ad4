"""Acceptance suite: one test per headline claim, each printing a single
pass/fail line.  Run with `pytest -s tests/test_acceptance.py` to see the
lines as they complete.

Runtime budgets and tolerances are pinned inside the corresponding check
functions in hermspec.verify; this file asserts them end to end.
"""

import time

import pytest

from hermspec import verify


def _run(label, fn, *args):
    start = time.perf_counter()
    try:
        passed, detail = fn(*args)
    except Exception as exc:  # a crashing check is a failing check
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {label}: {'PASS' if passed else 'FAIL'} ({elapsed:.2f}s) {detail}")
    assert passed, f"{label}: {detail}"


def test_01_four_extremal_fixtures_certify_exactly():
    # (1,-1), (1,-2), (sqrt3,-sqrt3), (2,-2) with multiplicities
    # (1,1), (2,1), (3,3), (5,5); exact arithmetic, < 1 s
    _run("01 extremal fixtures", verify.check_two_ev_fixtures)


def test_02_orientation_uniqueness_k33_and_k55m():
    # 512-point and 2^20-point scans, one isomorphism class each, < 60 s
    _run("02 orientation uniqueness", verify.check_orientation_uniqueness, "full")


def test_03_order5_tournament_is_a_no_case():
    # certifies no; 5 distinct eigenvalues with pairwise gaps > 1e-6
    _run("03 order-5 tournament", verify.check_order5_tournament)


def test_04_mixed_scans_and_all_undirected_cliques():
    # C4: one mixed class, no oriented hit; cube: 0/531441;
    # K2..K6 all-undirected certify {n-1, -1^(n-1)} at 1e-8
    _run("04 mixed two-ev", verify.check_mixed_two_ev)


def test_05_three_eigenvalue_tournaments():
    # q in {7,11,19}: spectrum matches (n-2)/2 and -1/2 +/- sqrt(3(n-1))/2
    # within 1e-8; q=3 collapses to the directed triangle
    _run("05 three-ev tournaments", verify.check_three_ev_tournaments)


def test_06_skew_hadamard_round_trip():
    # extracted bordered matrices satisfy A A^T = nI and A + A^T = 2I exactly
    _run("06 skew-Hadamard round trip", verify.check_hadamard_round_trip)


def test_07_k6_scans():
    # K6 orientations at k=4: 0/32768 hits; K6 signings: a hit with spectrum
    # +/-sqrt(5) x3 at 1e-8; both scans < 10 s
    _run("07 K6 scans", verify.check_k6_scans)


def test_08_bipartite_signed_oriented_transform():
    # 200 random bipartite signed graphs: spectrum preserved within 1e-9;
    # signed hypercubes n=1..5 certify +/-sqrt(n) at k=4
    _run("08 bipartite transform", verify.check_bipartite_transform)


def test_09_negative_eigenvalue_bound_on_all_hits():
    # every k=6 two-ev hit satisfies s >= -2, equality exactly on regular
    # oriented hits
    _run("09 negative-ev bound", verify.check_s_bound_on_hits, "full")


def test_10_large_order_desk_check():
    # k in {10, 12}, all connected oriented graphs on <= 5 vertices: only the
    # directed edge survives; < 120 s
    _run("10 large-k desk check", verify.check_large_k_desk)


def test_11_property_suites():
    # interlacing x1000, trace/Frobenius identities x200, exact-vs-float
    # agreement on every connected mixed graph with n <= 5 at k in {3,4,6}
    _run("11 property suites", verify.check_property_suites, "full")


def test_negative_control_detects_corruption():
    # a deliberately wrong fixture must fail its check
    from hermspec.certify import certify_two_ev
    from hermspec.graphs import OrientedGraph

    broken = OrientedGraph(6, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4),
                               (0, 5), (1, 5), (2, 5)])
    cert = certify_two_ev(broken, 6)
    assert not cert.verdict
