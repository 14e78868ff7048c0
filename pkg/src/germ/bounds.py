"""Closed-form invariants and the catalog of inequality checks.

Every verdict is computed with exact integer or rational arithmetic;
ratio bounds are cross-multiplied, never evaluated in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

#: Catalog order is fixed; JSON and CSV output follow it.
BOUND_IDS = (
    "positivity",
    "liu",
    "dimca_greuel_4_3",
    "conjecture_3_2",
    "wahl_2pg",
    "tomari",
    "durfee",
    "space_branch_quarter",
)


@dataclass(frozen=True)
class BoundVerdict:
    """One catalog entry: applicability, verdict and exact margin.

    ``holds`` is absent exactly when the entry does not apply or a
    needed optional input is missing; ``margin`` is present whenever it
    is computable from the inputs, and for a strict bound ``A < B`` it
    is ``B - A`` (so ``margin > 0`` iff the bound holds).
    """

    applicable: bool
    holds: bool | None
    margin: Fraction | None


@dataclass(frozen=True)
class BoundReport:
    mu: int
    tau: int
    germ_dimension: int
    p_g: int | None
    multiplicity: int | None
    verdicts: dict[str, BoundVerdict]


def bound_report(mu: int, tau: int, n: int, p_g: int | None = None,
                 multiplicity: int | None = None) -> BoundReport:
    """Evaluate every catalog bound on one (mu, tau) pair.

    ``n`` is the germ dimension, so the ambient variable count is
    ``n + 1``.  Bounds needing the geometric genus or the multiplicity
    report no verdict when those are not supplied.
    """
    if n < 1:
        raise ValueError("germ dimension must be at least 1")
    if tau < 1:
        raise ValueError("tau must be at least 1")
    if tau > mu:
        raise ValueError(f"invalid invariant pair: tau={tau} exceeds mu={mu}")
    N = n + 1
    margin_43 = Fraction(4 * tau - 3 * mu)
    verdicts = {
        "positivity": BoundVerdict(True, mu >= tau, Fraction(mu - tau)),
        "liu": BoundVerdict(True, N * tau >= mu, Fraction(N * tau - mu, N)),
        "dimca_greuel_4_3": BoundVerdict(n == 1, margin_43 > 0 if n == 1 else None, margin_43),
        "conjecture_3_2": BoundVerdict(n == 2, Fraction(3 * tau - 2 * mu) > 0 if n == 2 else None,
                                       Fraction(3 * tau - 2 * mu)),
        "space_branch_quarter": BoundVerdict(n == 1, margin_43 > 0 if n == 1 else None, margin_43),
    }
    wahl_margin = None if p_g is None else Fraction(2 * p_g - (mu - tau))
    verdicts["wahl_2pg"] = BoundVerdict(
        n == 2, wahl_margin >= 0 if (n == 2 and wahl_margin is not None) else None, wahl_margin)
    tomari_applicable = n == 2 and multiplicity == 2
    tomari_margin = None if p_g is None else Fraction(mu - (8 * p_g + 1))
    verdicts["tomari"] = BoundVerdict(
        tomari_applicable,
        tomari_margin >= 0 if (tomari_applicable and tomari_margin is not None) else None,
        tomari_margin)
    durfee_margin = None if p_g is None else Fraction(mu - 6 * p_g)
    verdicts["durfee"] = BoundVerdict(
        n == 2, durfee_margin >= 0 if (n == 2 and durfee_margin is not None) else None,
        durfee_margin)
    ordered = {key: verdicts[key] for key in BOUND_IDS}
    return BoundReport(mu, tau, n, p_g, multiplicity, ordered)


@dataclass(frozen=True)
class SuperisolatedData:
    """Degree of the initial projective curve and its local Milnor numbers."""

    d: int
    local_mus: tuple[int, ...] = ()

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("degree must be at least 2")
        if any(m < 1 for m in self.local_mus):
            raise ValueError("local Milnor numbers must be positive")


def superisolated_invariants(data: SuperisolatedData) -> tuple[int, int]:
    """Geometric genus and Milnor number of a superisolated germ.

    ``p_g = d(d-1)(d-2)/6`` and ``mu = (d-1)**3 + sum of local mus``;
    both products are exactly divisible.
    """
    d = data.d
    p_g = d * (d - 1) * (d - 2) // 6
    mu = (d - 1) ** 3 + sum(data.local_mus)
    return p_g, mu


def wahl_tau_min(d: int) -> int:
    """Minimal Tjurina number ``(2d-3)(d+1)(d-1)/3`` of the degree-d family."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    product = (2 * d - 3) * (d + 1) * (d - 1)
    assert product % 3 == 0
    return product // 3


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if k > n or n < 0 or k < 0:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    row = [1]  # S(0, 0)
    for m in range(1, n + 1):
        new = [0] * (min(m, k) + 1)
        for j in range(1, len(new)):
            below = row[j] if j < len(row) else 0
            new[j] = j * below + row[j - 1]
        row = new
    return row[k] if k < len(row) else 0


def kerner_nemethi_constant(n: int, r: int) -> Fraction:
    """Conjectured sharp constant relating mu and p_g in dimension n, codimension r."""
    if n < 2 or r < 1:
        raise ValueError("need n >= 2 and r >= 1")
    numerator = math.comb(n + r - 1, n) * math.factorial(n + r)
    denominator = stirling2(n + r, r) * math.factorial(r)
    return Fraction(numerator, denominator)
