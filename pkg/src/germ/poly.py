"""Sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a mapping from exponent vectors (one natural number per
ring variable) to nonzero ``Fraction`` coefficients.  All arithmetic is
exact: there is no floating point anywhere in this package, so equality
of polynomials and of computed dimensions is always decidable.

The text grammar accepted by :func:`parse_polynomial` (whitespace is
insignificant, multiplication by juxtaposition is allowed)::

    expr     := ['-'] term (('+'|'-') term)*
    term     := factor (('*' factor) | factor)*
    factor   := rational | var ['^' nat] | '(' expr ')' ['^' nat]
    rational := nat ['/' nat]
    var      := letter (letter | digit)*
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, UnknownVariableError

#: Exponent vector of a monomial, one entry per ring variable.
Monomial = tuple[int, ...]

Scalar = int | Fraction

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")


def _print_key(exps: Monomial):
    # Decreasing local order: lower total degree first, ties broken
    # reverse-lexicographically (the last differing variable decides).
    return (sum(exps), tuple(reversed(exps)))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    Instances are value objects: no operation mutates an existing
    polynomial, so they are safe to share between concurrent tasks.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, Scalar] | Iterable = ()):
        vs = tuple(vars)
        if not vs:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(vs)) != len(vs):
            raise ValueError("ring variables must be pairwise distinct")
        for name in vs:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for exps, coeff in items:
            e = tuple(exps)
            if len(e) != len(vs):
                raise ValueError(f"exponent vector {e} does not match ring of {len(vs)} variables")
            if any(not isinstance(x, int) or x < 0 for x in e):
                raise ValueError(f"exponents must be natural numbers, got {e}")
            c = clean.get(e, _ZERO) + Fraction(coeff)
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self.vars = vs
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Monomial, Fraction]) -> "Polynomial":
        # Internal fast path: caller guarantees normalized input.
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Polynomial":
        return cls(vars, {})

    @classmethod
    def constant(cls, vars: Sequence[str], value: Scalar) -> "Polynomial":
        return cls(vars, {(0,) * len(tuple(vars)): value})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Polynomial":
        vs = tuple(vars)
        if name not in vs:
            raise UnknownVariableError(name)
        exps = tuple(1 if v == name else 0 for v in vs)
        return cls(vs, {exps: 1})

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(vars, {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), _ZERO)

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), _ZERO)

    def total_degree(self) -> int:
        """Maximal total degree of a term; undefined for the zero polynomial."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        """Order of vanishing at the origin; undefined for the zero polynomial."""
        if not self.terms:
            raise ValueError("the zero polynomial has no order")
        return min(sum(e) for e in self.terms)

    def support(self) -> list[Monomial]:
        return sorted(self.terms, key=_print_key)

    # -- ring arithmetic ----------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError(f"ring mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return None

    def __add__(self, other) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in rhs.terms.items():
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial._raw(self.vars, {})
            return Polynomial._raw(self.vars, {e: k * c for e, k in self.terms.items()})
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in rhs.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, _ZERO) + ca * cb
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a natural number")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # mutable dict inside; use explicit keys if needed

    # -- calculus and gradings ----------------------------------------

    def partial_derivative(self, var: str) -> "Polynomial":
        """Formal partial derivative with respect to ``var``."""
        try:
            i = self.vars.index(var)
        except ValueError:
            raise UnknownVariableError(var) from None
        out: dict[Monomial, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Polynomial._raw(self.vars, out)

    def is_weighted_homogeneous(self, weights: Sequence[Scalar], degree: Scalar) -> bool:
        """True iff every monomial has weighted degree ``degree``.

        Vacuously true for the zero polynomial.
        """
        ws = [Fraction(w) for w in weights]
        if len(ws) != len(self.vars):
            raise ValueError(f"expected {len(self.vars)} weights, got {len(ws)}")
        if any(w <= 0 for w in ws):
            raise ValueError("weights must be positive")
        d = Fraction(degree)
        return all(sum(w * x for w, x in zip(ws, e)) == d for e in self.terms)

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Substitute a polynomial for every variable of the ring.

        All image polynomials must live in one common target ring.
        """
        missing = [v for v in self.vars if v not in images]
        if missing:
            raise ValueError(f"no image given for variables {missing}")
        target = next(iter(images.values())).vars
        result = Polynomial.zero(target)
        for e, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for v, k in zip(self.vars, e):
                if k:
                    term = term * images[v] ** k
            result = result + term
        return result

    # -- printing ------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda kv: _print_key(kv[0])):
            factors = [f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k]
            mag = -c if c < 0 else c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self.vars!r}, {str(self)!r})"


_ZERO = Fraction(0)


# ----------------------------------------------------------------------
# Parsing


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("nat", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum()):
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            out.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("end", None, n))
    return out


class _Parser:
    _FACTOR_START = ("nat", "name", "(")

    def __init__(self, tokens: list[_Token], vars: tuple[str, ...]):
        self.tokens = tokens
        self.k = 0
        self.vars = vars

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def advance(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expr(self) -> Polynomial:
        negate = False
        if self.peek().kind == "-":
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.advance()
                result = result * self.factor()
            elif kind in self._FACTOR_START:
                result = result * self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        tok = self.advance()
        if tok.kind == "nat":
            value = Fraction(tok.value)
            if self.peek().kind == "/":
                self.advance()
                den = self.advance()
                if den.kind != "nat":
                    raise ParseError("expected a natural number after '/'", den.pos)
                if den.value == 0:
                    raise ParseError("zero denominator", den.pos)
                value = Fraction(tok.value, den.value)
            return Polynomial.constant(self.vars, value)
        if tok.kind == "name":
            if tok.value not in self.vars:
                raise UnknownVariableError(tok.value, tok.pos)
            base = Polynomial.variable(self.vars, tok.value)
            return base ** self._optional_exponent()
        if tok.kind == "(":
            inner = self.expr()
            closing = self.advance()
            if closing.kind != ")":
                raise ParseError("expected ')'", closing.pos)
            return inner ** self._optional_exponent()
        raise ParseError(f"expected a number, variable or '(', found {tok.value!r}"
                         if tok.kind != "end" else "unexpected end of input", tok.pos)

    def _optional_exponent(self) -> int:
        if self.peek().kind != "^":
            return 1
        self.advance()
        tok = self.advance()
        if tok.kind != "nat":
            raise ParseError("exponent must be a natural number", tok.pos)
        return tok.value


def parse_polynomial(text: str, vars: Sequence[str]) -> Polynomial:
    """Parse ``text`` into a polynomial over the given variables.

    Raises :class:`~germ.errors.ParseError` with a character position on
    malformed input and :class:`~germ.errors.UnknownVariableError` for
    names outside the ring.
    """
    ring = Polynomial.zero(vars).vars  # runs variable validation
    parser = _Parser(_tokenize(text), ring)
    result = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(f"unexpected trailing input {trailing.value!r}", trailing.pos)
    return result


def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    """Formal partial derivative of ``p`` with respect to ``var``."""
    return p.partial_derivative(var)


def is_weighted_homogeneous(p: Polynomial, weights: Sequence[Scalar], degree: Scalar) -> bool:
    """True iff every monomial of ``p`` has weighted degree ``degree``."""
    return p.is_weighted_homogeneous(weights, degree)
