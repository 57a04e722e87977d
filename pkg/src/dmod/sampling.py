"""Seeded random objects for the property and verification suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .arrangement import Arrangement, normalize_coordinates
from .poly import LinearForm, Poly2
from .scalar import Scalar
from .weyl import WeylOp

__all__ = [
    "rand_rational",
    "rand_scalar",
    "rand_noninteger",
    "rand_c_values",
    "rand_normalized",
    "rand_op",
    "rand_weight0_op",
    "rand_poly",
    "rand_gl2",
    "generic_arrangement",
]


def rand_rational(rng: random.Random, max_den: int = 7, max_num: int = 9) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_scalar(rng: random.Random, max_den: int = 7, complex_prob: float = 0.3) -> Scalar:
    re = rand_rational(rng, max_den)
    im = rand_rational(rng, max_den) if rng.random() < complex_prob else 0
    return Scalar(re, im)


def rand_noninteger(rng: random.Random, max_den: int = 7) -> Scalar:
    while True:
        s = rand_scalar(rng, max_den)
        if not s.is_integer():
            return s


def rand_c_values(rng: random.Random, count: int, max_den: int = 7) -> list[Scalar]:
    out: list[Scalar] = []
    while len(out) < count:
        c = Scalar(rand_rational(rng, max_den))
        if c and c not in out:
            out.append(c)
    return out


def rand_normalized(rng: random.Random, m: int, max_den: int = 7, beta=None):
    """Arrangement x, y, c_3 x + y, ... with random distinct nonzero rational c_i."""
    c = rand_c_values(rng, m - 2, max_den)
    forms = [LinearForm(1, 0), LinearForm(0, 1)] + [LinearForm(ci, 1) for ci in c]
    if beta is None:
        beta = [rand_scalar(rng, max_den) for _ in range(m)]
    return normalize_coordinates(Arrangement(tuple(forms), tuple(beta)))


def _rand_coeff(rng: random.Random) -> Scalar:
    while True:
        c = rand_scalar(rng, 5, complex_prob=0.2)
        if c:
            return c


def rand_op(rng: random.Random, max_degree: int, max_terms: int = 6) -> WeylOp:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        cuts = sorted(rng.randint(0, d) for _ in range(3))
        mono = (cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], d - cuts[2])
        terms[mono] = _rand_coeff(rng)
    return WeylOp(terms)


def rand_weight0_op(rng: random.Random, max_degree: int, max_terms: int = 6) -> WeylOp:
    """Random operator with i + j == k + l on every monomial."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        half = rng.randint(0, max_degree // 2)
        a = rng.randint(0, half)
        b = rng.randint(0, half)
        terms[(a, half - a, b, half - b)] = _rand_coeff(rng)
    return WeylOp(terms)


def rand_poly(rng: random.Random, max_degree: int, max_terms: int = 4) -> Poly2:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        a = rng.randint(0, d)
        terms[(a, d - a)] = _rand_coeff(rng)
    return Poly2(terms)


def rand_gl2(rng: random.Random, max_den: int = 5):
    while True:
        T = [[Scalar(rand_rational(rng, max_den, 5)) for _ in range(2)] for _ in range(2)]
        if T[0][0] * T[1][1] - T[0][1] * T[1][0]:
            return T


def generic_arrangement(beta) -> Arrangement:
    """Forms x, y, x+y, 2x+y, ... carrying the given exponents."""
    m = len(beta)
    forms = [LinearForm(1, 0), LinearForm(0, 1)] + [LinearForm(i, 1) for i in range(1, m - 1)]
    return Arrangement(tuple(forms[:m]), tuple(beta))
