"""Seeded random polynomial fields for property checks.

Coefficients are integers in ``[-9, 9]``; degrees are bounded by ``degree``.
Members of Ω^k_N are produced by projecting a random tensor.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .complex import ComplexPosition, project
from .polynomial import Polynomial, coordinates
from .tensor import TensorField, transpose

COEFF_RANGE = 9


def _exponents(n: int, degree: int):
    for e in itertools.product(range(degree + 1), repeat=n):
        if sum(e) <= degree:
            yield e


def random_polynomial(rng: random.Random, n: int, degree: int, density: float = 0.5) -> Polynomial:
    ctx = coordinates(n)
    terms = {}
    for e in _exponents(n, degree):
        if rng.random() < density:
            c = rng.randint(-COEFF_RANGE, COEFF_RANGE)
            if c:
                terms[e] = Fraction(c)
    return Polynomial(terms, ctx)


def random_tensor(rng: random.Random, n: int, order: int, degree: int, variance: str | None = None, density: float = 0.5) -> TensorField:
    variance = "c" * order if variance is None else variance
    comps = [random_polynomial(rng, n, degree, density) for _ in range(n**order)]
    return TensorField(n, variance, comps)


def random_member(rng: random.Random, pos: ComplexPosition, degree: int, variance: str | None = None) -> TensorField:
    T = random_tensor(rng, pos.n, pos.k, degree, variance)
    return project(pos, T)


def random_symmetric(rng: random.Random, n: int, degree: int, variance: str = "cc") -> TensorField:
    T = random_tensor(rng, n, 2, degree, variance)
    return (T + transpose(T)) * Fraction(1, 2)
