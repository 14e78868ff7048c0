"""End-to-end acceptance battery, shared by the CLI and the test suite.

Each criterion returns a :class:`CriterionResult`; the CLI prints one
line per criterion and the pytest acceptance module asserts on them.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bounds import (SuperisolatedData, bound_report, kerner_nemethi_constant,
                     superisolated_invariants, wahl_tau_min)
from .corpus import deformed_corpus, quasihomogeneous_corpus
from .invariants import germ_invariants, jacobian_basis, milnor_number, suspend
from .jets import jet_quotient_dimension
from .localalg import quotient_codimension
from .poly import Polynomial, parse_polynomial
from .semigroup import (branch_milnor, certify_plane_branch, monomial_curve_equations,
                        semigroup_from_generators)

#: Seed of the shared acceptance corpus.
CORPUS_SEED = 42

BENCHMARK_GERM_TEXT = "x^14+y^6*z^8+z^14+x^9*z^5+(x+y+z)^15"
BENCHMARK_GERM_MU = 2288
BENCHMARK_GERM_TAU = 1660


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def acceptance_corpus() -> list[Polynomial]:
    """>= 200 two-variable germs: the 36 pure seeds plus seeded deformations."""
    pure = quasihomogeneous_corpus(range(3, 9), range(3, 9))
    deformed = deformed_corpus(range(3, 9), range(3, 9), 170, CORPUS_SEED)
    return pure + deformed


def _run(number: int, name: str, body: Callable[[], str]) -> CriterionResult:
    start = time.perf_counter()
    try:
        detail = body()
        passed = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def criterion_1() -> CriterionResult:
    def body() -> str:
        f = parse_polynomial(BENCHMARK_GERM_TEXT, ["x", "y", "z"])
        inv = germ_invariants(f)
        assert inv.mu == BENCHMARK_GERM_MU, f"mu={inv.mu}, expected {BENCHMARK_GERM_MU}"
        assert inv.tau == BENCHMARK_GERM_TAU, f"tau={inv.tau}, expected {BENCHMARK_GERM_TAU}"
        return f"mu={inv.mu} tau={inv.tau}"
    return _run(1, "benchmark superisolated germ", body)


def criterion_2(corpus: list[Polynomial]) -> CriterionResult:
    def body() -> str:
        assert len(corpus) >= 200, f"corpus has only {len(corpus)} germs"
        worst = None
        for f in corpus:
            inv = germ_invariants(f)
            assert inv.isolated, f"non-isolated corpus germ {f}"
            margin = 4 * inv.tau - 3 * inv.mu
            assert margin > 0, f"3mu<4tau fails for {f}: mu={inv.mu} tau={inv.tau}"
            if worst is None or margin < worst:
                worst = margin
        return f"{len(corpus)} germs, min(4tau-3mu)={worst}"
    return _run(2, "plane-curve 4/3 bound on corpus", body)


def criterion_3(corpus: list[Polynomial], count: int = 50) -> CriterionResult:
    def body() -> str:
        sample = corpus[:count]
        assert len(sample) >= 50, "need at least 50 germs"
        for f in sample:
            base = germ_invariants(f)
            top = germ_invariants(suspend(f, 2).suspended)
            assert top.mu == base.mu, f"mu changed under suspension for {f}"
            assert top.tau == base.tau, f"tau changed under suspension for {f}"
        return f"{len(sample)} suspensions checked"
    return _run(3, "suspension invariance of mu and tau", body)


def criterion_4(corpus: list[Polynomial]) -> CriterionResult:
    def body() -> str:
        with_weights = 0
        for f in corpus:
            inv = germ_invariants(f)
            if inv.weighted_homogeneous_in_coords is not None:
                with_weights += 1
                assert inv.mu == inv.tau, f"weights present but mu!=tau for {f}"
            if inv.mu != inv.tau:
                assert inv.weighted_homogeneous_in_coords is None, \
                    f"mu!=tau but weights found for {f}"
        assert with_weights, "no weighted homogeneous germ in corpus"
        return f"{with_weights} weighted-homogeneous germs, all with mu=tau"
    return _run(4, "weighted homogeneous germs have mu=tau", body)


def criterion_5(corpus: list[Polynomial]) -> CriterionResult:
    def body() -> str:
        checked = 0
        suspensions = [suspend(f, 2).suspended for f in corpus[:8]]
        for f in corpus + suspensions:
            basis = jacobian_basis(f)
            mu = quotient_codimension(basis)
            if not isinstance(mu, int) or mu > 30:
                continue
            gradient = [f.partial_derivative(v) for v in f.vars]
            oracle = jet_quotient_dimension([g for g in gradient if g])
            assert mu == oracle, f"engine mu={mu} vs jet oracle {oracle} for {f}"
            checked += 1
        assert checked, "no germ with mu <= 30 in corpus"
        return f"{checked} germs cross-checked against the jet oracle"
    return _run(5, "jet-oracle equivalence for mu <= 30", body)


def criterion_6(corpus: list[Polynomial]) -> CriterionResult:
    def body() -> str:
        three_var = [suspend(f, 2).suspended for f in corpus[:25]]
        three_var += [parse_polynomial(f"x^{d}+y^{d}+z^{d}", ["x", "y", "z"])
                      for d in range(2, 7)]
        checked = 0
        for f in corpus + three_var:
            inv = germ_invariants(f)
            if not inv.isolated:
                continue
            N = inv.germ_dimension + 1
            assert N * inv.tau >= inv.mu, \
                f"tau >= mu/N fails for {f}: mu={inv.mu} tau={inv.tau} N={N}"
            checked += 1
        return f"{checked} pairs checked in 2 and 3 variables"
    return _run(6, "Liu bound tau >= mu/N", body)


def criterion_7() -> CriterionResult:
    def body() -> str:
        for a in range(2, 10):
            for b in range(2, 10):
                f = parse_polynomial(f"x^{a}+y^{b}", ["x", "y"])
                assert milnor_number(f) == (a - 1) * (b - 1), f"mu(x^{a}+y^{b})"
        for d in range(2, 7):
            f = parse_polynomial(f"x^{d}+y^{d}+z^{d}", ["x", "y", "z"])
            assert milnor_number(f) == (d - 1) ** 3, f"mu of the d={d} diagonal germ"
        assert wahl_tau_min(2) == 1 and wahl_tau_min(5) == 56
        previous = None
        for d in range(2, 1001):
            ratio = Fraction((d - 1) ** 3, wahl_tau_min(d))
            assert ratio < Fraction(3, 2), f"ratio at d={d} reaches 3/2"
            if previous is not None:
                assert ratio >= previous, f"ratio decreases at d={d}"
            previous = ratio
        for n in range(2, 9):
            assert kerner_nemethi_constant(n, 1) == math.factorial(n + 1)
        assert kerner_nemethi_constant(2, 1) == 6
        return "monomial/diagonal closed forms, tau_min monotone < 3/2, constants"
    return _run(7, "closed-form formulas", body)


def criterion_8() -> CriterionResult:
    def body() -> str:
        for a in range(2, 13):
            for b in range(a + 1, 13):
                if math.gcd(a, b) != 1:
                    continue
                s = semigroup_from_generators([a, b])
                assert s.delta == (a - 1) * (b - 1) // 2, f"delta of <{a},{b}>"
                assert s.conductor == (a - 1) * (b - 1), f"conductor of <{a},{b}>"
                cert = certify_plane_branch([a, b])
                assert cert is not None, f"<{a},{b}> not certified"
                assert s.conductor == 2 * s.delta, f"symmetry fails for <{a},{b}>"
        for a in range(2, 10):
            for b in range(a + 1, 10):
                if math.gcd(a, b) != 1:
                    continue
                s = semigroup_from_generators([a, b])
                f = parse_polynomial(f"x^{a}+y^{b}", ["x", "y"])
                assert branch_milnor(s) == milnor_number(f), f"mu mismatch for <{a},{b}>"
        s = semigroup_from_generators([4, 6, 13])
        assert s.delta == 8 and s.conductor == 16
        assert s.gaps == (1, 2, 3, 5, 7, 9, 11, 15)
        cert = certify_plane_branch([4, 6, 13])
        assert cert is not None
        eqs = monomial_curve_equations(cert, [4, 6, 13])
        assert str(eqs) == "u1^2-u0^3, u2^2-u0^5*u1", str(eqs)
        return "two-generator closed forms, symmetry, <4,6,13> equations"
    return _run(8, "semigroup suite", body)


def criterion_9() -> CriterionResult:
    def body() -> str:
        p_g, mu = superisolated_invariants(SuperisolatedData(3))
        assert (p_g, mu) == (1, 8), f"(p_g, mu) at d=3: {(p_g, mu)}"
        p_g, mu = superisolated_invariants(SuperisolatedData(14, (91,)))
        assert p_g == 364 and mu == BENCHMARK_GERM_MU, f"d=14: p_g={p_g} mu={mu}"
        report = bound_report(BENCHMARK_GERM_MU, BENCHMARK_GERM_TAU, 2, p_g=364)
        assert report.verdicts["dimca_greuel_4_3"].margin < 0, "4/3 not exceeded"
        assert report.verdicts["conjecture_3_2"].holds is True, "3/2 not satisfied"
        return "superisolated formulas consistent; 4/3 exceeded, 3/2 holds"
    return _run(9, "superisolated consistency", body)


def run_all(fast: bool = False) -> list[CriterionResult]:
    """Run every acceptance criterion; ``fast`` skips the heavy benchmark germ."""
    corpus = acceptance_corpus()
    results = []
    if not fast:
        results.append(criterion_1())
    results.append(criterion_2(corpus))
    results.append(criterion_3(corpus))
    results.append(criterion_4(corpus))
    results.append(criterion_5(corpus))
    results.append(criterion_6(corpus))
    results.append(criterion_7())
    results.append(criterion_8())
    results.append(criterion_9())
    return results
