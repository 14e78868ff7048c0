"""Local monomial orders, Mora normal forms, and standard bases.

Computations happen in the localization of the polynomial ring at the
origin.  The monomial order is negative-degree reverse-lexicographic:
``1`` is the greatest monomial, lower total degree wins, and ties are
broken by the reverse-lexicographic rule under a variable precedence.

Internally every monomial is packed into a single integer with the
total degree in the top bits and one 16-bit field per variable, a guard
bit each.  This makes leading-term lookup an integer ``min`` and
divisibility a couple of bit operations; exponents above 2**15 - 1
raise :class:`~germ.errors.MonomialOverflowError` instead of wrapping.
Basis elements are primitive integer vectors and active remainders
carry exact rational coefficients, so every verdict is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappush, heappop
from math import gcd
from typing import Sequence

from .errors import ComputationBudgetExceeded, MonomialOverflowError
from .poly import Monomial, Polynomial

_FIELD_BITS = 16
_MAX_EXPONENT = (1 << (_FIELD_BITS - 1)) - 1

#: Return value of :func:`quotient_codimension` for non-isolated input.
INFINITE = math.inf

LESS, EQUAL, GREATER = -1, 0, 1


class LocalOrder:
    """Negative-degree reverse-lexicographic order on a fixed ring.

    ``precedence`` lists the variables from greatest to smallest; it
    defaults to the ring's own variable sequence.
    """

    __slots__ = ("variables", "precedence", "_perm", "_deg_shift", "_guard")

    def __init__(self, variables: Sequence[str], precedence: Sequence[str] | None = None):
        vs = tuple(variables)
        prec = tuple(precedence) if precedence is not None else vs
        if sorted(prec) != sorted(vs) or len(set(vs)) != len(vs):
            raise ValueError("precedence must be a permutation of the ring variables")
        self.variables = vs
        self.precedence = prec
        # Field j of a packed code holds the exponent of precedence[j];
        # the most significant exponent field is the last precedence
        # variable, so equal-degree codes compare reverse-lex correctly.
        self._perm = tuple(vs.index(name) for name in prec)
        self._deg_shift = _FIELD_BITS * len(vs)
        guard = 0
        for j in range(len(vs)):
            guard |= 1 << (_FIELD_BITS - 1 + _FIELD_BITS * j)
        self._guard = guard

    def __eq__(self, other) -> bool:
        return (isinstance(other, LocalOrder)
                and self.variables == other.variables
                and self.precedence == other.precedence)

    def __repr__(self) -> str:
        return f"LocalOrder({self.variables!r}, precedence={self.precedence!r})"

    @property
    def nvars(self) -> int:
        return len(self.variables)

    # -- packed codes ---------------------------------------------------

    def encode(self, exps: Monomial) -> int:
        """Pack an exponent vector; smaller codes are greater monomials."""
        if len(exps) != len(self.variables):
            raise ValueError(f"ring mismatch: expected {len(self.variables)} exponents, got {len(exps)}")
        code = 0
        total = 0
        for j, i in enumerate(self._perm):
            e = exps[i]
            if e < 0:
                raise ValueError("exponents must be natural numbers")
            if e > _MAX_EXPONENT:
                raise MonomialOverflowError(f"exponent {e} exceeds the machine bound {_MAX_EXPONENT}")
            code |= e << (_FIELD_BITS * j)
            total += e
        return (total << self._deg_shift) | code

    def decode(self, code: int) -> Monomial:
        exps = [0] * len(self.variables)
        mask = (1 << _FIELD_BITS) - 1
        for j, i in enumerate(self._perm):
            exps[i] = (code >> (_FIELD_BITS * j)) & mask
        return tuple(exps)

    def degree(self, code: int) -> int:
        return code >> self._deg_shift

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """-1, 0 or +1 as ``m1`` is smaller than, equal to or greater than ``m2``."""
        a, b = self.encode(m1), self.encode(m2)
        if a == b:
            return EQUAL
        return GREATER if a < b else LESS

    def sort_key(self, exps: Monomial) -> int:
        """Key under which ascending sorting gives decreasing monomials."""
        return self.encode(exps)


def compare(m1: Monomial, m2: Monomial, order: LocalOrder) -> int:
    """Total order on monomials: ``LESS``, ``EQUAL`` or ``GREATER``."""
    return order.compare(m1, m2)


# ----------------------------------------------------------------------
# Internal integer-coefficient representation


class _Rec:
    """A reducer: leading term, tail, and cached order data."""

    __slots__ = ("lm", "lc", "tail", "ecart", "lm_exps", "lm2", "lc2")

    def __init__(self, lm, lc, tail, ecart, lm_exps=None, lm2=None, lc2=None):
        self.lm = lm
        self.lc = lc
        self.tail = tail          # terms without the leading one
        self.ecart = ecart
        self.lm_exps = lm_exps
        self.lm2 = lm2
        self.lc2 = lc2

    def full_terms(self) -> dict:
        out = dict(self.tail)
        out[self.lm] = self.lc
        return out


def _content(terms: dict) -> int:
    g = 0
    for c in terms.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _strip(terms: dict) -> dict:
    """Divide by the integer content and make the leading coefficient positive."""
    if not terms:
        return terms
    g = _content(terms)
    if terms[min(terms)] < 0:
        g = -g
    if g != 1:
        for k in terms:
            terms[k] //= g
    return terms


def _encode_poly(p: Polynomial, order: LocalOrder) -> dict:
    """Convert to primitive integer coefficients keyed by packed code."""
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    out = {}
    for e, c in p.terms.items():
        out[order.encode(e)] = c.numerator * (den // c.denominator)
    return _strip(out)


def _decode_poly(terms: dict, order: LocalOrder) -> Polynomial:
    return Polynomial(order.variables, {order.decode(k): Fraction(c) for k, c in terms.items()})


def _make_rec(terms: dict, order: LocalOrder, with_pair_data: bool = False) -> _Rec:
    shift = order._deg_shift
    lm = min(terms)
    ecart = (max(terms) >> shift) - (lm >> shift)
    tail = {k: c for k, c in terms.items() if k != lm}
    rec = _Rec(lm, terms[lm], tail, ecart)
    if with_pair_data:
        rec.lm_exps = order.decode(lm)
        if tail:
            rec.lm2 = min(tail)
            rec.lc2 = tail[rec.lm2]
    return rec


# The active remainder of a reduction maps packed codes to rational
# coefficients stored as (numerator, positive denominator) pairs in
# lowest terms.  Working on plain tuples with one inlined gcd per term
# operation is several times faster than Fraction arithmetic, and it
# avoids the multiplicative coefficient swell of cross-multiplied
# integer remainders: each step subtracts a rational multiple of one
# primitive-integer reducer, so growth stays additive.


def _ratios(terms: dict) -> dict:
    return {k: (c, 1) for k, c in terms.items()}


def _primitive(terms: dict) -> dict:
    """Rescale (num, den) coefficients to a primitive integer vector, lc > 0."""
    if not terms:
        return {}
    den = 1
    for _, d in terms.values():
        den = den * d // math.gcd(den, d)
    out = {k: n * (den // d) for k, (n, d) in terms.items()}
    return _strip(out)


#: Sentinel truncation code when no degree bound is certified yet.
_NO_CORNER = 1 << 480


# ----------------------------------------------------------------------
# Standard bases


@dataclass(frozen=True)
class StandardBasis:
    """A standard basis together with its minimal leading-term ideal."""

    generators: tuple[Polynomial, ...]
    leading_ideal: tuple[Monomial, ...]
    order: LocalOrder


def _minimalize(gens: Sequence[Monomial]) -> list[Monomial]:
    """Minimal generators of a monomial ideal under divisibility."""
    unique = sorted(set(gens), key=lambda e: (sum(e), e))
    out: list[Monomial] = []
    for m in unique:
        if not any(all(x >= y for x, y in zip(m, d)) for d in out):
            out.append(m)
    return out


def _coprime_skip(f: _Rec, g: _Rec) -> bool:
    """Sound product criterion for local orders.

    With coprime leading monomials the s-polynomial equals
    ``tail(f)*g - tail(g)*f``, which is a standard representation unless
    the leading terms of the two products cancel exactly.  Cancellation
    cannot happen in a global order but can locally, so the pair is only
    skipped when it provably does not.
    """
    if any(x and y for x, y in zip(f.lm_exps, g.lm_exps)):
        return False
    if f.lm2 is None or g.lm2 is None:
        return True
    if f.lm2 + g.lm != g.lm2 + f.lm:
        return True
    return f.lc2 * g.lc != g.lc2 * f.lc


def _staircase_max_degree(gens: frozenset, nvars: int, memo: dict) -> int:
    """Largest total degree outside a cofinite monomial ideal, -1 if none."""
    cached = memo.get(gens)
    if cached is not None:
        return cached
    gen_list = list(gens)
    if any(not any(m) for m in gen_list):
        return -1
    mixed = [m for m in gen_list if sum(1 for e in m if e) > 1]
    if not mixed:
        result = sum(max(m) - 1 for m in gen_list)
    else:
        counts = [0] * nvars
        for m in mixed:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
        pivot = counts.index(max(counts))
        unit = tuple(1 if i == pivot else 0 for i in range(nvars))
        without = frozenset(_minimalize([m for m in gen_list if m[pivot] == 0] + [unit]))
        colon = frozenset(_minimalize(
            [m[:pivot] + (max(m[pivot] - 1, 0),) + m[pivot + 1:] for m in gen_list]))
        a = _staircase_max_degree(without, nvars, memo)
        b = _staircase_max_degree(colon, nvars, memo)
        result = max(a, b + 1 if b >= 0 else -1)
    memo[gens] = result
    return result


def _corner_degree(lm_exps: list[Monomial], nvars: int) -> int | None:
    """Least degree k with every monomial of degree >= k in the ideal.

    None while some variable still lacks a pure power (the staircase is
    infinite and no truncation degree is certified).
    """
    mins = _minimalize(lm_exps)
    if any(not any(m) for m in mins):
        return 0
    if _pure_power_bounds(mins, nvars) is None:
        return None
    return _staircase_max_degree(frozenset(mins), nvars, {}) + 1


def _nf_slice(h: dict, own: list[_Rec], records: list[_Rec], order: LocalOrder,
              corner_code: int, ceiling: int, work: list, step_limit: int | None):
    """Mora reduction of ``h`` up to a leading-degree ceiling.

    Returns ``("done", terms)`` when ``h`` is irreducible (terms empty
    when it reduced to zero) and ``("paused", h, own)`` as soon as the
    leading degree climbs past ``ceiling``.  ``own`` carries the
    snapshots this particular reduction admitted, so a resumed run is a
    continuation of the same Mora normal form; reducers from ``records``
    are scanned first, then the task's own snapshots, earliest first and
    minimal ecart winning.
    """
    guard = order._guard
    shift = order._deg_shift
    if corner_code is not _NO_CORNER:
        h = {k: v for k, v in h.items() if k < corner_code}
    while h:
        lm_h = min(h)
        if (lm_h >> shift) > ceiling:
            return ("paused", h, own)
        best = None
        best_ecart = None
        for r in records:
            if ((lm_h | guard) - r.lm) & guard == guard:
                e = r.ecart
                if best is None or e < best_ecart:
                    best, best_ecart = r, e
                    if e == 0:
                        break
        if best_ecart != 0:
            for r in own:
                if ((lm_h | guard) - r.lm) & guard == guard:
                    e = r.ecart
                    if best is None or e < best_ecart:
                        best, best_ecart = r, e
        if best is None:
            return ("done", _primitive(h))
        ecart_h = (max(h) >> shift) - (lm_h >> shift)
        if best_ecart > ecart_h:
            snap = _primitive(h)
            own.append(_make_rec(snap, order))
        # Work is metered in tail-term operations plus a coefficient-size
        # surcharge, so runaway precedences fail their budget early.
        work[0] += len(best.tail) + 1
        if step_limit is not None and work[0] > step_limit:
            raise ComputationBudgetExceeded(f"standard-basis run exceeded {step_limit} work units")
        bn, bd = h.pop(lm_h)
        lc = best.lc
        if lc != 1:
            g = gcd(bn, lc)
            bn //= g
            bd *= lc // g
        work[0] += (bn.bit_length() + bd.bit_length()) >> 3
        s = lm_h - best.lm
        for k, c in best.tail.items():
            kk = k + s
            if kk >= corner_code:
                continue
            if kk & guard:
                raise MonomialOverflowError("intermediate exponent exceeds the machine bound")
            v = h.get(kk)
            nc = bn * c
            if v is None:
                g = gcd(nc, bd)
                h[kk] = (-(nc // g), bd // g)
            else:
                vn, vd = v
                num = vn * bd - nc * vd
                if num:
                    den = vd * bd
                    g = gcd(num, den)
                    h[kk] = (num // g, den // g)
                else:
                    del h[kk]
    return ("done", h)


def _spoly(f: _Rec, g: _Rec, lcm_code: int, order: LocalOrder,
           corner_code: int = _NO_CORNER) -> dict:
    guard = order._guard
    gcd_lc = math.gcd(f.lc, g.lc)
    a = g.lc // gcd_lc
    b = f.lc // gcd_lc
    s1 = lcm_code - f.lm
    s2 = lcm_code - g.lm
    out = {}
    for k, c in f.full_terms().items():
        kk = k + s1
        if kk >= corner_code:
            continue
        if kk & guard:
            raise MonomialOverflowError("intermediate exponent exceeds the machine bound")
        out[kk] = a * c
    for k, c in g.full_terms().items():
        kk = k + s2
        if kk >= corner_code:
            continue
        if kk & guard:
            raise MonomialOverflowError("intermediate exponent exceeds the machine bound")
        v = out.get(kk, 0) - b * c
        if v:
            out[kk] = v
        else:
            out.pop(kk, None)
    return _ratios(out)


def _complete(records: list[_Rec], start_pairs_from: int, order: LocalOrder,
              step_limit: int | None = None) -> list[_Rec]:
    """Buchberger completion with Mora normal forms.

    Work items (fresh pairs and partially reduced s-polynomials) are
    processed by ascending degree, ties by creation order.  A reduction
    whose leading degree climbs past the degree frontier is paused and
    requeued, so the basis saturates one degree layer at a time; this
    is what lets pure powers, and with them the truncation bound below,
    appear as early as possible.  Pairs among
    ``records[:start_pairs_from]`` are assumed to reduce to zero
    already (warm start).

    As soon as the current leading terms certify that all monomials of
    some degree lie in the ideal, every later computation is truncated
    at that degree (and the bound keeps improving as the basis grows);
    work at or beyond the bound reduces to zero for free.
    """
    shift = order._deg_shift
    heap: list = []  # (degree, seq, payload); payload: pair or paused task
    pending: set[tuple[int, int]] = set()
    seq = 0
    corner: int | None = None
    corner_code = _NO_CORNER
    work = [0]

    def refresh_corner() -> None:
        nonlocal corner, corner_code
        new = _corner_degree([r.lm_exps for r in records], order.nvars)
        if new is None or (corner is not None and new >= corner):
            return
        corner = new
        corner_code = corner << shift
        for r in records:
            if any(k >= corner_code for k in r.tail):
                r.tail = {k: c for k, c in r.tail.items() if k < corner_code}
                top = max(r.tail) if r.tail else r.lm
                r.ecart = (max(top, r.lm) >> shift) - (r.lm >> shift)
                r.lm2 = min(r.tail) if r.tail else None
                r.lc2 = r.tail[r.lm2] if r.tail else None

    def push_pairs(t: int) -> None:
        nonlocal seq
        lo = 0 if t >= start_pairs_from else start_pairs_from
        for i in range(lo, t):
            lcm_exps = tuple(max(x, y) for x, y in
                             zip(records[i].lm_exps, records[t].lm_exps))
            lcm_code = order.encode(lcm_exps)
            heappush(heap, (sum(lcm_exps), seq, ("pair", i, t, lcm_exps, lcm_code)))
            pending.add((i, t))
            seq += 1

    def run_task(key: tuple[int, int], h: dict, own: list[_Rec], degree: int) -> None:
        nonlocal seq
        if not h or (corner is not None and (min(h) >> shift) >= corner):
            pending.discard(key)
            return
        state = _nf_slice(h, own, records, order, corner_code,
                          max(degree, min(h) >> shift), work, step_limit)
        if state[0] == "paused":
            _, h, own = state
            heappush(heap, (min(h) >> shift, seq, ("task", key, h, own)))
            seq += 1
            return
        pending.discard(key)
        rem = state[1]
        if rem:
            records.append(_make_rec(rem, order, with_pair_data=True))
            push_pairs(len(records) - 1)
            refresh_corner()

    refresh_corner()
    for t in range(len(records)):
        push_pairs(t)

    while heap:
        degree, _, item = heappop(heap)
        if item[0] == "task":
            _, key, h, own = item
            run_task(key, h, own, degree)
            continue
        _, i, j, lcm_exps, lcm_code = item
        if corner is not None and degree >= corner:
            pending.discard((i, j))  # the s-polynomial lives beyond the bound
            continue
        fi, gj = records[i], records[j]
        if _coprime_skip(fi, gj):
            pending.discard((i, j))
            continue
        # Chain criterion: skip when some other leading monomial divides
        # the lcm and both companion pairs were already treated.
        skip = False
        for k, r in enumerate(records):
            if k == i or k == j:
                continue
            if all(x <= y for x, y in zip(r.lm_exps, lcm_exps)):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            pending.discard((i, j))
            continue
        run_task((i, j), _spoly(fi, gj, lcm_code, order, corner_code), [], degree)
    return records


def _prepare_records(gens: Sequence[Polynomial], order: LocalOrder) -> list[_Rec]:
    records = []
    for p in gens:
        if p.vars != order.variables:
            raise ValueError("all generators must live in the ring of the order")
        terms = _encode_poly(p, order)
        if terms:
            records.append(_make_rec(terms, order, with_pair_data=True))
    return records


def _finish(records: list[_Rec], order: LocalOrder) -> StandardBasis:
    lead = _minimalize([r.lm_exps for r in records])
    gens = tuple(_decode_poly(r.full_terms(), order) for r in records)
    return StandardBasis(gens, tuple(lead), order)


def standard_basis(gens: Sequence[Polynomial], order: LocalOrder | None = None, *,
                   monomial_fast_path: bool = True,
                   step_limit: int | None = None) -> StandardBasis:
    """Standard basis of the ideal generated by ``gens`` in the local ring.

    Monomial input is already a standard basis and is returned directly
    unless ``monomial_fast_path`` is disabled (the general algorithm
    must agree and the tests hold it to that).
    """
    gens = [p for p in gens if p]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    if order is None:
        order = LocalOrder(gens[0].vars)
    records = _prepare_records(gens, order)
    if monomial_fast_path and all(not r.tail for r in records):
        return _finish(records, order)
    return _finish(_complete(records, 0, order, step_limit), order)


def extend_standard_basis(basis: StandardBasis, extra: Sequence[Polynomial], *,
                          step_limit: int | None = None) -> StandardBasis:
    """Complete ``basis`` to a standard basis of the enlarged ideal.

    Pairs among the existing generators are not reconsidered, which
    makes this a cheap warm start when one generator is appended.
    """
    order = basis.order
    records = _prepare_records(basis.generators, order)
    start = len(records)
    new = _prepare_records(extra, order)
    if not new:
        return basis
    records.extend(new)
    return _finish(_complete(records, start, order, step_limit), order)


def mora_normal_form(p: Polynomial, G: Sequence[Polynomial], order: LocalOrder | None = None) -> Polynomial:
    """Mora weak normal form of ``p`` modulo the reducers ``G``.

    The result ``r`` satisfies ``u*p - r`` in the ideal generated by
    ``G`` for some unit ``u`` of the local ring; ``r`` is zero exactly
    when ``p`` lies in the ideal generated by ``G`` in the local ring,
    and otherwise no leading monomial of the final reducer set divides
    the leading monomial of ``r``.  Nonzero results are normalized to
    primitive integer coefficients with positive leading coefficient.
    """
    if order is None:
        order = LocalOrder(p.vars)
    reducers = _prepare_records(G, order)
    h = _encode_poly(p, order)
    if not h or not reducers:
        return p
    state = _nf_slice(_ratios(h), [], reducers, order, _NO_CORNER,
                      1 << 62, [0], None)
    rem = state[1]
    if rem == h:
        return p
    return _decode_poly(rem, order)


# ----------------------------------------------------------------------
# Codimension of the quotient


def _pure_power_bounds(gens: Sequence[Monomial], nvars: int) -> list[int] | None:
    """Exponent of a pure power per variable, or None if one is missing."""
    bounds = [0] * nvars
    for m in gens:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] == 0 or m[i] < bounds[i]:
                bounds[i] = m[i]
    if all(bounds):
        return bounds
    return None


def _staircase_size(gens: frozenset, nvars: int, memo: dict) -> int:
    """Count the monomials outside a cofinite monomial ideal.

    Recursive splitting: picking a variable ``x`` present in a mixed
    generator, the staircase partitions into the part annihilated by
    ``x`` (ideal plus ``x``) and ``x`` times the staircase of the
    colon ideal.  Base case: pure-power generators span a box.
    """
    cached = memo.get(gens)
    if cached is not None:
        return cached
    gen_list = list(gens)
    if any(not any(m) for m in gen_list):
        return 0  # 1 lies in the ideal
    mixed = [m for m in gen_list if sum(1 for e in m if e) > 1]
    if not mixed:
        # minimal + cofinite forces exactly one pure power per variable
        assert len(gen_list) == nvars
        result = 1
        for m in gen_list:
            result *= max(m)
    else:
        counts = [0] * nvars
        for m in mixed:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
        pivot = counts.index(max(counts))
        unit = tuple(1 if i == pivot else 0 for i in range(nvars))
        without = [m for m in gen_list if m[pivot] == 0] + [unit]
        colon = [m[:pivot] + (max(m[pivot] - 1, 0),) + m[pivot + 1:] for m in gen_list]
        result = (_staircase_size(frozenset(_minimalize(without)), nvars, memo)
                  + _staircase_size(frozenset(_minimalize(colon)), nvars, memo))
    memo[gens] = result
    return result


def quotient_codimension(basis: StandardBasis) -> int | float:
    """Vector-space dimension of the local ring modulo the ideal.

    Finite exactly when every variable has a pure power in the leading
    ideal; returns :data:`INFINITE` otherwise.
    """
    gens = _minimalize(basis.leading_ideal)
    nvars = len(basis.order.variables)
    if any(not any(m) for m in gens):
        return 0
    if _pure_power_bounds(gens, nvars) is None:
        return INFINITE
    return _staircase_size(frozenset(gens), nvars, {})
