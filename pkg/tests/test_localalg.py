"""Local order, Mora normal form, standard bases, staircase counting."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from germ import (EQUAL, GREATER, INFINITE, LESS, LocalOrder, MonomialOverflowError,
                  Polynomial, compare, extend_standard_basis, mora_normal_form,
                  parse_polynomial, quotient_codimension, standard_basis)
from germ.localalg import StandardBasis, _minimalize

V2 = ("x", "y")


def P(text, vars=V2):
    return parse_polynomial(text, vars)


def brute_staircase(gens, nvars, box):
    """Oracle: enumerate all monomials in a box and keep the undivided ones."""
    out = []
    for mono in itertools.product(*[range(b) for b in box]):
        if not any(all(m >= g for m, g in zip(mono, gen)) for gen in gens):
            out.append(mono)
    return out


# -- ordering ------------------------------------------------------------


def test_compare_examples():
    order = LocalOrder(V2)
    assert compare((0, 0), (1, 0), order) == GREATER  # 1 beats x locally
    assert compare((2, 0), (0, 2), order) == GREATER  # revlex: x^2 beats y^2
    assert compare((1, 0), (1, 0), order) == EQUAL
    assert compare((0, 2), (2, 0), order) == LESS


def test_compare_ring_mismatch():
    with pytest.raises(ValueError):
        compare((1, 0), (1, 0, 0), LocalOrder(V2))


def test_order_is_total_and_multiplicative():
    order = LocalOrder(("x", "y", "z"))
    monos = list(itertools.product(range(3), repeat=3))
    keys = {m: order.sort_key(m) for m in monos}
    assert len(set(keys.values())) == len(monos)
    # compatibility with multiplication: m1 > m2 => m1*t > m2*t
    for m1, m2, t in random.Random(7).sample(
            [(a, b, c) for a in monos for b in monos for c in monos], 300):
        if keys[m1] < keys[m2]:
            p1 = tuple(a + b for a, b in zip(m1, t))
            p2 = tuple(a + b for a, b in zip(m2, t))
            assert order.sort_key(p1) < order.sort_key(p2)


def test_precedence_changes_tie_break():
    order = LocalOrder(V2, precedence=("y", "x"))
    assert compare((0, 2), (2, 0), order) == GREATER


def test_exponent_overflow_detected():
    order = LocalOrder(V2)
    with pytest.raises(MonomialOverflowError):
        order.encode((1 << 15, 0))


def test_order_validation():
    with pytest.raises(ValueError):
        LocalOrder(V2, precedence=("x", "w"))
    with pytest.raises(ValueError):
        LocalOrder(V2, precedence=("x",))


@given(st.tuples(st.integers(0, 1000), st.integers(0, 1000), st.integers(0, 1000)))
@settings(max_examples=80, deadline=None)
def test_encode_decode_roundtrip(m):
    for prec in [("x", "y", "z"), ("z", "x", "y")]:
        order = LocalOrder(("x", "y", "z"), precedence=prec)
        assert order.decode(order.encode(m)) == m
        assert order.degree(order.encode(m)) == sum(m)


# -- Mora normal form -----------------------------------------------------


def test_nf_examples():
    x, y = P("x"), P("y")
    assert mora_normal_form(P("x^2"), [x]) == 0
    assert mora_normal_form(x, [y]) == x


def test_nf_local_unit_example():
    # y - y^2 = y*(1 - y) and 1 - y is a unit of the local ring, so y lies
    # in the ideal.  Oracle: multiply y - y^2 by the truncated inverse
    # 1 + y + y^2 + ... of the unit and observe that only a term of
    # arbitrarily high degree is left over.
    g = P("y-y^2")
    truncated_inverse = sum((P("y") ** k for k in range(1, 30)), P("1"))
    residue = g * truncated_inverse - P("y")
    assert residue.min_degree() >= 30
    assert mora_normal_form(P("y"), [g]) == 0


def test_nf_respects_leading_ideal():
    basis = standard_basis([P("2*x*y"), P("x^2+3*y^2")])
    for text in ["x^3", "x^2*y", "y^4+x^5", "x^2+x*y+y^3"]:
        r = mora_normal_form(P(text), list(basis.generators))
        if r:
            lead = min(r.terms, key=basis.order.sort_key)
            assert not any(all(a >= b for a, b in zip(lead, g))
                           for g in basis.leading_ideal)


def test_nf_confluence_zero_verdict_under_reducer_permutations():
    basis = standard_basis([P("x^2+y^3"), P("x*y")])
    gens = list(basis.generators)
    rng = random.Random(3)
    polys = [P("x^3"), P("x^2*y"), P("y^4"), P("x^2+x*y"), P("y^3+x^4"), P("x^5+y^5")]
    for p in polys:
        verdicts = set()
        for _ in range(6):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            verdicts.add(mora_normal_form(p, shuffled) == 0)
        assert len(verdicts) == 1


# -- standard bases --------------------------------------------------------


def test_standard_basis_monomial_input():
    sb = standard_basis([P("3*x^2"), P("4*y^3")])
    assert sb.leading_ideal == ((2, 0), (0, 3))


def test_standard_basis_d4_jacobian():
    # Oracle: by hand, spoly(2xy, x^2+3y^2) = y*(x^2+3y^2) - (x/2)*(2xy)
    # = 3y^3, which is irreducible by {x^2, xy}.
    f, g = P("2*x*y"), P("x^2+3*y^2")
    spoly = P("y") * g - (P("x") * Fraction(1, 2)) * f
    assert spoly == P("3*y^3")
    sb = standard_basis([f, g])
    assert set(sb.leading_ideal) == {(2, 0), (1, 1), (0, 3)}


def test_standard_basis_single_variable_generator():
    sb = standard_basis([P("x")])
    assert sb.leading_ideal == ((1, 0),)
    assert quotient_codimension(sb) == INFINITE


def test_standard_basis_self_reduction_property():
    for gens in ([P("x^2+y^3"), P("x*y")],
                 [P("x^3-2*y^4"), P("x*y^2+y^5"), P("y^6+x^5")]):
        sb = standard_basis(gens)
        for g in sb.generators:
            assert mora_normal_form(g, list(sb.generators)) == 0


def test_standard_basis_rejects_empty():
    with pytest.raises(ValueError):
        standard_basis([Polynomial.zero(V2)])


def test_monomial_fast_path_agrees_with_general_path():
    rng = random.Random(11)
    for _ in range(25):
        gens = [Polynomial.monomial(V2, (rng.randint(0, 5), rng.randint(0, 5)), rng.randint(1, 9))
                for _ in range(rng.randint(1, 5))]
        fast = standard_basis(gens)
        slow = standard_basis(gens, monomial_fast_path=False)
        assert fast.leading_ideal == slow.leading_ideal
        assert quotient_codimension(fast) == quotient_codimension(slow)


def test_extend_standard_basis_matches_fresh_run():
    gens = [P("x^3+y^4"), P("x*y^2")]
    extra = P("y^5+x^2*y")
    warm = extend_standard_basis(standard_basis(gens), [extra])
    fresh = standard_basis(gens + [extra])
    assert set(warm.leading_ideal) == set(fresh.leading_ideal)
    assert quotient_codimension(warm) == quotient_codimension(fresh)


def test_extend_standard_basis_trivial_cases():
    basis = standard_basis([P("x^2+y^3"), P("x*y")])
    assert extend_standard_basis(basis, []) is basis
    assert extend_standard_basis(basis, [Polynomial.zero(V2)]) is basis
    # adjoining an ideal member changes nothing
    member = P("x+y") * basis.generators[0]
    extended = extend_standard_basis(basis, [member])
    assert set(extended.leading_ideal) == set(basis.leading_ideal)
    assert quotient_codimension(extended) == quotient_codimension(basis)


def test_unit_in_ideal_gives_codimension_zero():
    sb = standard_basis([P("1+x")])
    assert quotient_codimension(sb) == 0


# -- staircase counting ----------------------------------------------------


def test_codimension_examples():
    order = LocalOrder(V2)
    assert quotient_codimension(
        StandardBasis((P("x^2"), P("y^3")), ((2, 0), (0, 3)), order)) == 6
    assert quotient_codimension(
        StandardBasis((P("x^2"), P("x*y"), P("y^3")), ((2, 0), (1, 1), (0, 3)), order)) == 4
    assert quotient_codimension(
        StandardBasis((P("x"),), ((1, 0),), order)) == INFINITE


@pytest.mark.parametrize("nvars", [2, 3])
def test_staircase_count_matches_brute_enumeration(nvars):
    rng = random.Random(5 + nvars)
    vars = ("x", "y", "z")[:nvars]
    order = LocalOrder(vars)
    for _ in range(40):
        gens = {tuple(rng.randint(0, 6) for _ in range(nvars))
                for _ in range(rng.randint(1, 6))}
        # force pure powers so the count is finite
        for i in range(nvars):
            gens.add(tuple(rng.randint(1, 7) if j == i else 0 for j in range(nvars)))
        mins = _minimalize(list(gens))
        box = [max(g[i] for g in mins) + 1 for i in range(nvars)]
        expected = len(brute_staircase(mins, nvars, box))
        basis = StandardBasis(tuple(Polynomial.monomial(vars, m) for m in mins),
                              tuple(mins), order)
        assert quotient_codimension(basis) == expected


def test_codimension_matches_jet_oracle_on_small_ideals():
    from germ import jet_quotient_dimension
    cases = [[P("x^2+y^3"), P("x*y")],
             [P("x^3-y^3"), P("x*y^2+y^4")],
             [P("x^4+y^4+x*y^3"), P("2*x^3+y^3")]]
    for gens in cases:
        engine = quotient_codimension(standard_basis(gens))
        oracle = jet_quotient_dimension(gens)
        assert engine == oracle


coeffs = st.integers(-5, 5).filter(bool)
exps2 = st.tuples(st.integers(0, 4), st.integers(0, 4))


@given(st.dictionaries(exps2, coeffs, min_size=1, max_size=4),
       st.dictionaries(exps2, coeffs, min_size=1, max_size=4))
@settings(max_examples=30, deadline=None)
def test_basis_members_reduce_to_zero(d1, d2):
    gens = [Polynomial(V2, d1), Polynomial(V2, d2)]
    gens = [g for g in gens if g]
    if not gens:
        return
    sb = standard_basis(gens)
    for g in sb.generators:
        assert mora_normal_form(g, list(sb.generators)) == 0
    # random ideal elements also reduce to zero
    combo = gens[0] * P("x+y^2") + (gens[-1] * P("3+x*y") if len(gens) > 1 else 0)
    assert mora_normal_form(combo, list(sb.generators)) == 0