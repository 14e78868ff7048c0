"""Seeded germ families and the sweep driver.

Corpora are fully determined by the sweep seed.  Deformed families add
small integer terms strictly above the weighted degree of a
quasihomogeneous seed germ, which keeps the deformations in the
semi-quasihomogeneous regime; non-isolated draws are reported in their
row and excluded from ratio summaries rather than silently retried.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .bounds import BOUND_IDS, BoundReport, bound_report
from .invariants import germ_invariants, suspend
from .poly import Polynomial, parse_polynomial

FAMILIES = ("fermat", "suspension", "quasihomogeneous_2var", "deformed_quasihomogeneous")


@dataclass(frozen=True)
class SweepSpec:
    """Family name, parameter ranges and the seed that fixes the corpus."""

    family: str
    seed: int = 0
    a_min: int = 3
    a_max: int = 8
    b_min: int = 3
    b_max: int = 8
    d_min: int = 2
    d_max: int = 6
    count: int = 50
    suspension_power: int = 2

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.a_min < 2 or self.b_min < 2 or self.a_max < self.a_min or self.b_max < self.b_min:
            raise ValueError("invalid a/b range")
        if self.d_min < 2 or self.d_max < self.d_min:
            raise ValueError("invalid degree range")
        if self.count < 1:
            raise ValueError("count must be positive")
        if self.seed < 0 or self.seed >= 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        if self.suspension_power < 2:
            raise ValueError("suspension power must be at least 2")


def _deformations(a: int, b: int, rng: random.Random, max_terms: int = 3,
                  coeff_bound: int = 3) -> Polynomial:
    """x^a + y^b plus seeded terms of strictly higher weighted degree."""
    vars = ("x", "y")
    terms = {(a, 0): Fraction(1), (0, b): Fraction(1)}
    candidates = [(i, j) for i in range(a + 3) for j in range(b + 3)
                  if i * b + j * a > a * b and (i, j) not in terms]
    picks = rng.sample(candidates, min(rng.randint(1, max_terms), len(candidates)))
    for i, j in picks:
        c = rng.choice([k for k in range(-coeff_bound, coeff_bound + 1) if k])
        terms[(i, j)] = terms.get((i, j), Fraction(0)) + c
    return Polynomial(vars, terms)


def quasihomogeneous_corpus(a_range, b_range) -> list[Polynomial]:
    return [parse_polynomial(f"x^{a}+y^{b}", ["x", "y"])
            for a in a_range for b in b_range]


def deformed_corpus(a_range, b_range, count: int, seed: int) -> list[Polynomial]:
    rng = random.Random(seed)
    a_lo, a_hi = min(a_range), max(a_range)
    b_lo, b_hi = min(b_range), max(b_range)
    out = []
    for _ in range(count):
        a = rng.randint(a_lo, a_hi)
        b = rng.randint(b_lo, b_hi)
        out.append(_deformations(a, b, rng))
    return out


def generate_corpus(spec: SweepSpec) -> list[Polynomial]:
    """The deterministic germ list of a sweep specification."""
    if spec.family == "fermat":
        return [parse_polynomial(f"x^{d}+y^{d}+z^{d}", ["x", "y", "z"])
                for d in range(spec.d_min, spec.d_max + 1)]
    if spec.family == "quasihomogeneous_2var":
        return quasihomogeneous_corpus(range(spec.a_min, spec.a_max + 1),
                                       range(spec.b_min, spec.b_max + 1))
    if spec.family == "deformed_quasihomogeneous":
        return deformed_corpus(range(spec.a_min, spec.a_max + 1),
                               range(spec.b_min, spec.b_max + 1),
                               spec.count, spec.seed)
    # suspension: a deformed curve corpus pushed up one dimension
    base = deformed_corpus(range(spec.a_min, spec.a_max + 1),
                           range(spec.b_min, spec.b_max + 1),
                           spec.count, spec.seed)
    return [suspend(f, spec.suspension_power).suspended for f in base]


@dataclass(frozen=True)
class ReportRow:
    """One germ of a sweep: invariants, verdicts and timing."""

    index: int
    germ: str
    n: int
    mu: int | None
    tau: int | None
    isolated: bool
    ratio: Fraction | None
    report: BoundReport | None
    wall_time_s: float
    note: str = ""


def evaluate_germ(index: int, f: Polynomial) -> ReportRow:
    """Compute one report row; pure apart from the timing field."""
    start = time.perf_counter()
    inv = germ_invariants(f)
    elapsed = time.perf_counter() - start
    if not inv.isolated:
        return ReportRow(index, str(f), inv.germ_dimension, None, None, False,
                         None, None, elapsed, note="non-isolated; excluded from summary")
    report = (bound_report(inv.mu, inv.tau, inv.germ_dimension)
              if inv.germ_dimension >= 1 and inv.tau >= 1 else None)
    note = ""
    if inv.weighted_homogeneous_in_coords is not None and inv.mu != inv.tau:
        note = "saito direction violated"  # impossible unless the engine is broken
    return ReportRow(index, str(f), inv.germ_dimension, inv.mu, inv.tau, True,
                     inv.ratio, report, elapsed, note=note)


def _evaluate_indexed(args) -> ReportRow:
    return evaluate_germ(*args)


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[ReportRow, ...]
    min_ratio: Fraction | None
    max_ratio: Fraction | None
    min_43_margin: Fraction | None
    violations: tuple[str, ...]


def sweep(spec: SweepSpec, threads: int | None = None) -> SweepResult:
    """Evaluate a whole corpus; deterministic under a fixed seed.

    ``threads`` (or the ``GERM_THREADS`` environment variable) caps the
    number of worker processes; rows keep corpus order regardless.
    """
    corpus = generate_corpus(spec)
    jobs = list(enumerate(corpus))
    if threads is None:
        threads = int(os.environ.get("GERM_THREADS", "1"))
    if threads < 1:
        raise ValueError("thread count must be positive")
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_evaluate_indexed, jobs))
    else:
        rows = [evaluate_germ(i, f) for i, f in jobs]
    ratios = [r.ratio for r in rows if r.ratio is not None]
    margins = [r.report.verdicts["dimca_greuel_4_3"].margin
               for r in rows if r.report is not None and r.n == 1]
    violations = []
    for r in rows:
        if r.note and "violated" in r.note:
            violations.append(f"row {r.index}: {r.note}")
        if r.report is None:
            continue
        for key in BOUND_IDS:
            v = r.report.verdicts[key]
            if v.holds is False:
                violations.append(f"row {r.index}: {key}")
    return SweepResult(
        spec=spec,
        rows=tuple(rows),
        min_ratio=min(ratios) if ratios else None,
        max_ratio=max(ratios) if ratios else None,
        min_43_margin=min(margins) if margins else None,
        violations=tuple(violations),
    )
