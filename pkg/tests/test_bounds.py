"""Closed-form invariants and the bound catalog."""

import math
from fractions import Fraction

import pytest

from germ import (BOUND_IDS, SuperisolatedData, bound_report,
                  kerner_nemethi_constant, stirling2, superisolated_invariants,
                  wahl_tau_min)


def test_stirling2_values():
    # Oracle: recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1) tabulated by hand
    # for small n; S(3,2)=3, S(4,2)=7, S(5,2)=15.
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(5, 2) == 15
    assert stirling2(0, 0) == 1
    for n in range(1, 9):
        assert stirling2(n, 1) == 1
        assert stirling2(n, n) == 1
    with pytest.raises(ValueError):
        stirling2(2, 3)


def test_stirling2_row_sums_are_bell_numbers():
    bell = [1, 1, 2, 5, 15, 52, 203, 877]
    for n, b in enumerate(bell):
        assert sum(stirling2(n, k) for k in range(n + 1)) == b


def test_kerner_nemethi_values():
    assert kerner_nemethi_constant(2, 1) == 6
    assert kerner_nemethi_constant(3, 1) == 24
    assert kerner_nemethi_constant(3, 2) == 16  # binom(4,3)*5! / (15*2!)
    for n in range(2, 9):
        assert kerner_nemethi_constant(n, 1) == math.factorial(n + 1)
    with pytest.raises(ValueError):
        kerner_nemethi_constant(1, 1)


def test_wahl_tau_min_values():
    assert wahl_tau_min(2) == 1
    assert wahl_tau_min(5) == 56
    assert wahl_tau_min(100) == 197 * 101 * 99 // 3
    for d in range(2, 1001):
        assert (2 * d - 3) * (d + 1) * (d - 1) % 3 == 0


def test_wahl_ratio_monotone_below_three_halves():
    previous = None
    for d in range(2, 1001):
        ratio = Fraction((d - 1) ** 3, wahl_tau_min(d))
        assert ratio < Fraction(3, 2)
        if previous is not None:
            assert ratio >= previous
        previous = ratio
    # the limit is approached: by d = 1000 the gap is tiny
    assert Fraction(3, 2) - previous < Fraction(1, 250)


def test_superisolated_invariants():
    assert superisolated_invariants(SuperisolatedData(3)) == (1, 8)
    assert superisolated_invariants(SuperisolatedData(2)) == (0, 1)
    p_g, mu = superisolated_invariants(SuperisolatedData(14, (91,)))
    assert (p_g, mu) == (364, 2288)
    for d in range(2, 40):
        p_g, _ = superisolated_invariants(SuperisolatedData(d))
        assert 6 * p_g == d * (d - 1) * (d - 2)
    with pytest.raises(ValueError):
        SuperisolatedData(1)
    with pytest.raises(ValueError):
        SuperisolatedData(3, (0,))


def test_bound_report_catalog_is_complete():
    report = bound_report(10, 9, 1)
    assert tuple(report.verdicts) == BOUND_IDS


def test_bound_report_surface_example():
    report = bound_report(2288, 1660, 2)
    v = report.verdicts
    assert v["dimca_greuel_4_3"].applicable is False
    assert v["dimca_greuel_4_3"].holds is None
    assert v["dimca_greuel_4_3"].margin == Fraction(4 * 1660 - 3 * 2288)
    assert v["dimca_greuel_4_3"].margin < 0  # the 4/3 ratio is exceeded
    assert v["conjecture_3_2"].holds is True
    assert v["conjecture_3_2"].margin == Fraction(3 * 1660 - 2 * 2288)
    assert v["positivity"].holds is True
    assert v["wahl_2pg"].applicable is True and v["wahl_2pg"].holds is None


def test_bound_report_quasihomogeneous_curve():
    report = bound_report(4, 4, 1)
    v = report.verdicts
    assert all(entry.holds for entry in v.values() if entry.holds is not None)
    assert v["dimca_greuel_4_3"].margin == 4
    assert v["space_branch_quarter"].holds is True
    assert v["conjecture_3_2"].applicable is False


def test_bound_report_liu_failure_flags_unrealizable_pair():
    report = bound_report(10, 4, 1)
    assert report.verdicts["liu"].holds is False
    assert report.verdicts["liu"].margin == Fraction(2 * 4 - 10, 2)


def test_bound_report_optional_inputs():
    report = bound_report(100, 90, 2, p_g=12, multiplicity=2)
    v = report.verdicts
    assert v["wahl_2pg"].holds is (2 * 12 >= 10)
    assert v["tomari"].applicable is True
    assert v["tomari"].holds is (100 >= 8 * 12 + 1)
    assert v["durfee"].holds is (100 >= 6 * 12)
    without = bound_report(100, 90, 2)
    assert without.verdicts["tomari"].applicable is False
    assert without.verdicts["durfee"].holds is None
    assert without.verdicts["durfee"].margin is None


def test_bound_report_margin_sign_iff_holds():
    for (mu, tau, n, pg) in [(4, 4, 1, None), (12, 10, 1, None), (30, 20, 2, 3),
                             (2288, 1660, 2, 364), (16, 16, 1, 1)]:
        report = bound_report(mu, tau, n, p_g=pg)
        for key in ("dimca_greuel_4_3", "conjecture_3_2", "space_branch_quarter"):
            v = report.verdicts[key]
            if v.holds is not None:
                assert v.holds == (v.margin > 0)
        for key in ("positivity", "liu", "wahl_2pg", "tomari", "durfee"):
            v = report.verdicts[key]
            if v.holds is not None:
                assert v.holds == (v.margin >= 0)


def test_bound_report_validation():
    with pytest.raises(ValueError):
        bound_report(3, 4, 1)
    with pytest.raises(ValueError):
        bound_report(4, 0, 1)
    with pytest.raises(ValueError):
        bound_report(4, 4, 0)