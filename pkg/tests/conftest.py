from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import strategies as st

from dmod.poly import Poly2
from dmod.scalar import Scalar
from dmod.weyl import WeylOp

X, Y = sp.symbols("x y")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)
scalars = st.builds(Scalar, rationals, rationals)
real_scalars = st.builds(Scalar, rationals)


@st.composite
def polys(draw, max_degree=4, max_terms=5):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        a = draw(st.integers(0, max_degree))
        b = draw(st.integers(0, max_degree - a))
        terms[(a, b)] = draw(scalars)
    return Poly2(terms)


@st.composite
def weyl_ops(draw, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        mono = tuple(draw(st.integers(0, max_degree)) for _ in range(4))
        if sum(mono) <= max_degree:
            terms[mono] = draw(scalars)
    return WeylOp(terms)


# -- sympy oracles ----------------------------------------------------------


def sym_scalar(c: Scalar):
    return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)


def sym_poly(p: Poly2):
    return sum((sym_scalar(c) * X**a * Y**b for (a, b), c in p.terms.items()), sp.Integer(0))


def sym_apply(A: WeylOp, expr):
    """Act by a normal-ordered operator on a sympy expression with plain differentiation."""
    total = sp.Integer(0)
    for (i, j, k, l), c in A.terms.items():
        term = expr
        if l:
            term = sp.diff(term, Y, l)
        if k:
            term = sp.diff(term, X, k)
        total += sym_scalar(c) * Y**i * X**j * term
    return total


def sym_twisted(e, beta=None):
    """sympy expression for p * prod a_i^(beta_i + N_i)."""
    arr = e.arr
    beta = arr.beta if beta is None else beta
    expr = sym_poly(e.p)
    for f, b, n in zip(arr.forms, beta, e.N):
        form = sym_scalar(f.a) * X + sym_scalar(f.b) * Y
        expr *= form ** (sym_scalar(b) + n)
    return expr


def sym_is_zero(expr) -> bool:
    return sp.simplify(sp.expand(expr)) == 0


@pytest.fixture
def F():
    return Fraction
