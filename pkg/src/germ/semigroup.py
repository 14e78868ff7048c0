"""Numerical semigroups and plane-branch machinery.

A numerical semigroup is a cofinite additive submonoid of the naturals.
Membership, gaps, delta and the conductor are computed exactly through
the Apery set of the smallest generator.  A semigroup is certified as
the semigroup of a plane branch when its gcd chain satisfies the two
classical conditions, in which case the Milnor number of any branch
realizing it is twice the gap count and the associated monomial curve
is cut out by explicit binomials.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import NotPlaneBranchError
from .poly import Polynomial


def _validate_generators(gens: Sequence[int]) -> list[int]:
    out = sorted(set(int(g) for g in gens))
    if not out:
        raise ValueError("need at least one generator")
    if out[0] < 1:
        raise ValueError("generators must be positive integers")
    g = 0
    for x in out:
        g = math.gcd(g, x)
    if g != 1:
        raise ValueError(f"generators have gcd {g} > 1: the complement would be infinite")
    return out


def _reachable(target: int, gens: Sequence[int]) -> bool:
    """Unbounded-knapsack membership of ``target`` in the monoid of ``gens``."""
    if target == 0:
        return True
    bits = 1  # bit i set <=> i representable
    mask = (1 << (target + 1)) - 1
    for g in gens:
        if g == 0 or g > target:
            continue
        prev = 0
        while prev != bits:
            prev = bits
            bits |= (bits << g) & mask
    return bool(bits >> target & 1)


def minimal_generators(gens: Sequence[int]) -> tuple[int, ...]:
    """Drop every generator representable by the smaller ones."""
    candidates = sorted(set(int(g) for g in gens))
    kept: list[int] = []
    for g in candidates:
        if not _reachable(g, kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class NumericalSemigroup:
    """Semigroup data: minimal generators, gaps, delta, conductor.

    ``apery[r]`` is the least member congruent to ``r`` modulo the
    smallest generator, which decides membership in O(1).
    """

    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    delta: int
    conductor: int
    apery: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.apery[x % self.generators[0]]


def semigroup_from_generators(gens: Sequence[int]) -> NumericalSemigroup:
    """Build the semigroup generated by ``gens`` (gcd must be 1).

    Non-minimal generating sets are minimized with a warning.
    """
    valid = _validate_generators(gens)
    minimal = minimal_generators(valid)
    if list(minimal) != valid:
        warnings.warn(f"generating set {valid} is not minimal; using {list(minimal)}",
                      stacklevel=2)
    a = minimal[0]
    apery = [None] * a
    apery[0] = 0
    heap = [(0, 0)]
    while heap:
        value, residue = heapq.heappop(heap)
        if apery[residue] is not None and apery[residue] < value:
            continue
        for g in minimal[1:]:
            nv = value + g
            nr = nv % a
            if apery[nr] is None or nv < apery[nr]:
                apery[nr] = nv
                heapq.heappush(heap, (nv, nr))
    conductor = max(apery) - a + 1
    gaps = tuple(x for x in range(conductor) if x < apery[x % a])
    return NumericalSemigroup(minimal, gaps, len(gaps), conductor, tuple(apery))


# ----------------------------------------------------------------------
# Plane-branch certification


@dataclass(frozen=True)
class PlaneBranchCertificate:
    """Witness that a semigroup is the semigroup of a plane branch.

    ``e[i]`` is the gcd of the first i+1 generators, ``n[i] = e[i-1]/e[i]``
    for i >= 1, and ``witnesses[i-1]`` expresses ``n[i]*generators[i]``
    over the earlier generators in canonical form (every coordinate of
    index >= 1 below the matching n).
    """

    generators: tuple[int, ...]
    e: tuple[int, ...]
    n: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]
    condition2_ok: bool


def _canonical_witness(beta: Sequence[int], e: Sequence[int], n: Sequence[int],
                       i: int) -> tuple[int, ...] | None:
    """Canonical representation of n_i*beta_i over beta_0..beta_{i-1}.

    Greedy reduction down the gcd chain: at level j the coefficient is
    the unique value in [0, n_j) matching the target modulo e_{j-1}.
    Returns None exactly when the membership of condition (1) fails.
    """
    target = n[i] * beta[i]
    coeffs = [0] * i
    for j in range(i - 1, 0, -1):
        found = None
        for cand in range(n[j]):
            if (target - cand * beta[j]) % e[j - 1] == 0:
                found = cand
                break
        if found is None:
            return None
        coeffs[j] = found
        target -= found * beta[j]
        if target < 0:
            return None
    if target < 0 or target % beta[0]:
        return None
    coeffs[0] = target // beta[0]
    return tuple(coeffs)


def certify_plane_branch(gens: Sequence[int]) -> PlaneBranchCertificate | None:
    """Certificate that ``gens`` generate a plane-branch semigroup, or None.

    Condition (1): ``n_i * beta_i`` lies in the semigroup of the earlier
    generators, with the canonical witness stored.  Condition (2):
    ``n_i * beta_i < beta_{i+1}`` for i = 1..g-1 (the clause at i = g
    compares against a generator that does not exist and is vacuous).
    """
    valid = _validate_generators(gens)
    beta = list(minimal_generators(valid))
    if beta != valid:
        warnings.warn(f"generating set {valid} is not minimal; certifying {beta}",
                      stacklevel=2)
    g = len(beta) - 1
    e = [0] * (g + 1)
    e[0] = beta[0]
    for i in range(1, g + 1):
        e[i] = math.gcd(e[i - 1], beta[i])
    n = [0] * (g + 1)
    for i in range(1, g + 1):
        n[i] = e[i - 1] // e[i]
        if n[i] < 2:
            return None
    witnesses = []
    for i in range(1, g + 1):
        w = _canonical_witness(beta, e, n, i)
        if w is None:
            return None
        witnesses.append(w)
    for i in range(1, g):
        if not n[i] * beta[i] < beta[i + 1]:
            return None
    return PlaneBranchCertificate(
        generators=tuple(beta),
        e=tuple(e),
        n=tuple(n[1:]),
        witnesses=tuple(witnesses),
        condition2_ok=True,
    )


def branch_milnor(s: NumericalSemigroup) -> int:
    """Milnor number ``2 * delta`` of a plane branch with semigroup ``s``."""
    if certify_plane_branch(s.generators) is None:
        raise NotPlaneBranchError(f"{s.generators} is not the semigroup of a plane branch")
    return 2 * s.delta


@dataclass(frozen=True)
class MonomialCurveEquations:
    """Binomial equations of the monomial curve of a plane branch.

    Relation i (for i = 1..g) is ``u_i**n_i - prod_j u_j**l_j`` with the
    canonical exponents from the certificate; substituting
    ``u_j -> t**beta_j`` kills every relation identically.
    """

    generators: tuple[int, ...]
    relations: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(f"u{i}" for i in range(len(self.generators)))

    def as_polynomials(self) -> list[Polynomial]:
        out = []
        nvars = len(self.generators)
        for i, (power, exps) in enumerate(self.relations, start=1):
            lead = tuple(power if j == i else 0 for j in range(nvars))
            tail = tuple(exps) + (0,) * (nvars - len(exps))
            out.append(Polynomial(self.variables, {lead: 1, tail: -1}))
        return out

    def __str__(self) -> str:
        return ", ".join(str(p) for p in self.as_polynomials())


def monomial_curve_equations(cert: PlaneBranchCertificate,
                             gens: Sequence[int]) -> MonomialCurveEquations:
    """Equations of the monomial curve attached to a certified semigroup."""
    beta = tuple(minimal_generators(_validate_generators(gens)))
    if beta != cert.generators:
        raise ValueError("certificate does not match the generators")
    relations = []
    for i, (power, witness) in enumerate(zip(cert.n, cert.witnesses), start=1):
        assert power * beta[i] == sum(l * b for l, b in zip(witness, beta))
        relations.append((power, witness))
    return MonomialCurveEquations(beta, tuple(relations))


def space_branch_bound_check(mu: int, tau: int) -> bool:
    """Exact check of ``mu - tau < mu / 4`` as ``4*(mu - tau) < mu``."""
    if not (isinstance(mu, int) and isinstance(tau, int)):
        raise ValueError("mu and tau must be integers")
    if tau < 1 or tau > mu:
        raise ValueError(f"invalid invariant pair mu={mu}, tau={tau}")
    return 4 * (mu - tau) < mu
