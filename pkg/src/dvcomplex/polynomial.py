"""Exact multivariate polynomials over the rationals.

A :class:`Polynomial` is a sparse map from exponent vectors to
:class:`fractions.Fraction` coefficients, tied to an ordered tuple of
variable names.  Two polynomials can only be combined when their variable
tuples are identical; use :meth:`Polynomial.embed` to move between contexts.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Scalar = int | Fraction


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    pass


def coordinates(n: int) -> tuple[str, ...]:
    """Names of the Cartesian coordinates ``x1..xn``."""
    return tuple(f"x{i}" for i in range(1, n + 1))


class Polynomial:
    __slots__ = ("terms", "variables", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar], variables: Sequence[str]):
        variables = tuple(variables)
        clean = {}
        for exps, c in terms.items():
            if len(exps) != len(variables):
                raise PolynomialError(
                    f"exponent vector {exps} does not match variables {variables}"
                )
            if c:
                clean[tuple(exps)] = Fraction(c)
        self.terms: dict[tuple[int, ...], Fraction] = clean
        self.variables: tuple[str, ...] = variables
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> Polynomial:
        return cls({}, variables)

    @classmethod
    def constant(cls, c: Scalar, variables: Sequence[str]) -> Polynomial:
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> Polynomial:
        variables = tuple(variables)
        if name not in variables:
            raise PolynomialError(f"unknown variable {name!r}")
        exps = tuple(int(v == name) for v in variables)
        return cls({exps: 1}, variables)

    @classmethod
    def monomial(cls, exps: Sequence[int], variables: Sequence[str], c: Scalar = 1) -> Polynomial:
        return cls({tuple(exps): c}, variables)

    @classmethod
    def lincomb(cls, pairs: Iterable[tuple[Scalar, Polynomial]], variables: Sequence[str]) -> Polynomial:
        """``sum(c * p for c, p in pairs)`` without intermediate objects."""
        acc: dict[tuple[int, ...], Fraction] = {}
        variables = tuple(variables)
        for c, p in pairs:
            if not c:
                continue
            if p.variables != variables:
                raise PolynomialError("variable context mismatch")
            for e, v in p.terms.items():
                acc[e] = acc.get(e, 0) + c * v
        return cls(acc, variables)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolynomialError("polynomial is not constant")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def free_of(self, name: str) -> bool:
        if name not in self.variables:
            return True
        k = self.variables.index(name)
        return all(e[k] == 0 for e in self.terms)

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r}") from None

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise PolynomialError(
                    f"variable context mismatch: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(acc, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.variables)
            return Polynomial({e: c * other for e, c in self.terms.items()}, self.variables)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(acc, self.variables)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("only non-negative integer powers")
        result = Polynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.variables)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- calculus and substitution ---------------------------------------

    def diff(self, name: str) -> Polynomial:
        k = self._index(name)
        acc = {}
        for e, c in self.terms.items():
            if e[k]:
                e2 = e[:k] + (e[k] - 1,) + e[k + 1 :]
                acc[e2] = c * e[k]
        return Polynomial(acc, self.variables)

    def substitute(self, name: str, value: Polynomial | Scalar) -> Polynomial:
        """Replace variable ``name`` by ``value`` (which must not depend on it)."""
        k = self._index(name)
        if not isinstance(value, Polynomial):
            value = Polynomial.constant(value, self.variables)
        elif value.variables != self.variables:
            raise PolynomialError("variable context mismatch")
        if not value.free_of(name):
            raise PolynomialError(f"substituted value depends on {name!r}")
        powers = {0: Polynomial.constant(1, self.variables)}
        pairs = []
        for e, c in self.terms.items():
            a = e[k]
            if a not in powers:
                powers[a] = value**a
            rest = Polynomial({e[:k] + (0,) + e[k + 1 :]: c}, self.variables)
            pairs.append((1, rest * powers[a]))
        return Polynomial.lincomb(pairs, self.variables)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for name, a in zip(self.variables, e):
                if a:
                    term *= Fraction(point[name]) ** a
            total += term
        return total

    def embed(self, variables: Sequence[str]) -> Polynomial:
        """Re-express in a context containing all variables that occur."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        acc = {}
        for e, c in self.terms.items():
            e2 = [0] * len(variables)
            for name, a in zip(self.variables, e):
                if a:
                    if name not in pos:
                        raise PolynomialError(f"variable {name!r} occurs but is not in target context")
                    e2[pos[name]] = a
            acc[tuple(e2)] = c
        return Polynomial(acc, variables)

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, {self.variables})"


def partial_derivative(p: Polynomial, v: str) -> Polynomial:
    return p.diff(v)


def scale_substitute(p: Polynomial, factor: str, coords: Sequence[str] | None = None) -> Polynomial:
    """Replace every coordinate ``x`` by ``factor * x``.

    The result lives in ``p.variables + (factor,)``.  A homogeneous part of
    degree ``d`` in the coordinates picks up ``factor**d``.
    """
    if factor in p.variables:
        raise PolynomialError(f"scaling variable {factor!r} collides with the context")
    coords = p.variables if coords is None else tuple(coords)
    mask = [v in coords for v in p.variables]
    acc = {}
    for e, c in p.terms.items():
        d = sum(a for a, m in zip(e, mask) if m)
        acc[e + (d,)] = c
    return Polynomial(acc, p.variables + (factor,))


def definite_integral(p: Polynomial, v: str, lower: Polynomial | Scalar, upper: Polynomial | Scalar) -> Polynomial:
    """Exact ``∫_lower^upper p dv``; the result keeps ``v`` in its context."""
    k = p._index(v)
    acc = {}
    for e, c in p.terms.items():
        e2 = e[:k] + (e[k] + 1,) + e[k + 1 :]
        acc[e2] = c / (e[k] + 1)
    anti = Polynomial(acc, p.variables)
    return anti.substitute(v, upper) - anti.substitute(v, lower)


def drop_variable(p: Polynomial, v: str) -> Polynomial:
    """Remove ``v`` from the context; ``p`` must not depend on it."""
    if not p.free_of(v):
        raise PolynomialError(f"polynomial still depends on {v!r}")
    return p.embed(tuple(x for x in p.variables if x != v))


# -- text grammar -----------------------------------------------------------
#
# Terms are ``c v1^a v2^b`` with a rational coefficient ``p/q``; terms are
# joined by ``+``/``-``.  Example: ``3/2 x1^2 x2 - 1 x3``.

_TOKEN = re.compile(r"\s*(?:([+-])|(\d+(?:/\d+)?)|([A-Za-z_]\w*)(?:\^(\d+))?|(\*))")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    variables = tuple(variables)
    pos = 0
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    terms: list[tuple[Fraction, list[int]]] = []
    sign = 1
    coef: Fraction | None = None
    exps: list[int] | None = None

    def flush():
        nonlocal sign, coef, exps
        if coef is None and exps is None:
            return
        terms.append((sign * (coef if coef is not None else Fraction(1)), exps or [0] * len(variables)))
        sign, coef, exps = 1, None, None

    expect_term = True
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        op, num, name, power, star = m.groups()
        if star:
            continue
        if op:
            if not expect_term or coef is not None or exps is not None:
                flush()
            sign = sign * (-1 if op == "-" else 1)
            expect_term = True
        elif num:
            if coef is not None or exps is not None:
                raise ParseError(f"missing '+' or '-' before {num!r}")
            try:
                coef = Fraction(num)
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {num!r}") from None
            expect_term = False
        else:
            if name not in variables:
                raise ParseError(f"unknown variable {name!r}; expected one of {variables}")
            if exps is None:
                exps = [0] * len(variables)
            exps[variables.index(name)] += int(power) if power else 1
            expect_term = False
    if expect_term:
        raise ParseError("dangling sign at end of polynomial")
    flush()
    acc: dict[tuple[int, ...], Fraction] = {}
    for c, e in terms:
        acc[tuple(e)] = acc.get(tuple(e), 0) + c
    return Polynomial(acc, variables)


def _term_key(e: tuple[int, ...]):
    return (-sum(e), tuple(-a for a in e))


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, key=_term_key):
        c = p.terms[e]
        mono = " ".join(
            name if a == 1 else f"{name}^{a}" for name, a in zip(p.variables, e) if a
        )
        body = str(abs(c)) + (" " + mono if mono else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
