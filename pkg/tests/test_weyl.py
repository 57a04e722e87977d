from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from dmod.poly import Poly2
from dmod.scalar import Scalar
from dmod.weyl import (
    NotHomogeneousError,
    WeylMonomial,
    WeylOp,
    build_annihilators,
    compare_monomials,
    in_N,
    in_N0_span,
    initial_term,
    normal_form,
    parse_op,
    weight_component,
    weyl_mul,
)

from conftest import X, Y, sym_apply, weyl_ops

x, y, Dx, Dy = WeylOp.x(), WeylOp.y(), WeylOp.Dx(), WeylOp.Dy()
one = WeylOp.const(1)
BETA3 = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))


def test_commutation_examples():
    assert Dx * x == x * Dx + 1
    assert Dy * y * y == y * y * Dy + y.scale(2)
    assert x * Dx == WeylOp.monomial(j=1, k=1)


def test_commutation_relations():
    assert Dx * x - x * Dx == one
    assert Dy * y - y * Dy == one
    for a, b in [(Dx, y), (Dy, x), (x, y), (Dx, Dy)]:
        assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(weyl_ops(), weyl_ops())
def test_product_matches_composition_of_differential_operators(A, B):
    # independent oracle: act on a generic smooth function with sympy
    f = sp.Function("f")(X, Y)
    lhs = sym_apply(weyl_mul(A, B), f)
    rhs = sym_apply(A, sym_apply(B, f))
    assert sp.expand(lhs - rhs) == 0


@settings(max_examples=60, deadline=None)
@given(weyl_ops(), weyl_ops(), weyl_ops())
def test_associativity(A, B, C):
    assert (A * B) * C == A * (B * C)


@settings(max_examples=40, deadline=None)
@given(weyl_ops(), weyl_ops())
def test_weight_is_additive(A, B):
    for u in A.weights():
        for v in B.weights():
            prod = weight_component(A, u) * weight_component(B, v)
            assert prod.weights() <= {u + v}


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((0, 1, 1, 0), (1, 0, 0, 1), 1),  # x Dx > y Dy
        ((4, 0, 0, 1), (3, 1, 0, 1), 1),  # y^(m-1) Dy > y^(m-2) x Dy, m = 5
        ((0, 0, 0, 0), (0, 1, 0, 0), -1),  # 1 < x
        ((1, 0, 0, 0), (0, 1, 0, 0), 1),  # y > x
        ((0, 0, 1, 0), (0, 0, 0, 1), 1),  # Dx > Dy
    ],
)
def test_compare_monomials(a, b, expected):
    assert compare_monomials(a, b) == expected
    assert compare_monomials(b, a) == -expected


def _brute_force_order(a, b):
    # literal reading of the definition
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    diff = [p - q for p, q in zip(a, b)]
    nz = [d for d in diff if d]
    if not nz:
        return 0
    return 1 if nz[-1] < 0 else -1


def test_order_matches_definition_exhaustively():
    monos = [(i, j, k, l) for i in range(3) for j in range(3) for k in range(3) for l in range(3)]
    for a in monos:
        for b in monos:
            assert compare_monomials(a, b) == _brute_force_order(a, b)


def test_order_is_multiplicative():
    monos = [(i, j, k, l) for i in range(3) for j in range(3) for k in range(2) for l in range(2)]
    for a in monos:
        for b in monos:
            if compare_monomials(a, b) > 0:
                for c in monos[:20]:
                    ac = tuple(p + q for p, q in zip(a, c))
                    bc = tuple(p + q for p, q in zip(b, c))
                    assert compare_monomials(ac, bc) > 0


def test_initial_terms():
    ann = build_annihilators([1], BETA3)
    assert initial_term(ann.P) == (WeylMonomial(0, 1, 1, 0), Scalar(1))
    assert initial_term(ann.Q) == (WeylMonomial(2, 0, 0, 1), Scalar(1))
    assert initial_term(WeylOp.const(5)) == (WeylMonomial(0, 0, 0, 0), Scalar(5))
    with pytest.raises(ValueError):
        initial_term(WeylOp())


def test_annihilators_m2():
    b1, b2 = Scalar(Fraction(2, 7)), Scalar(Fraction(-1, 3), 1)
    ann = build_annihilators([], [b1, b2])
    assert ann.Q == y * Dy - b2
    assert ann.P == x * Dx + y * Dy - (b1 + b2)


def test_annihilators_m3():
    ann = build_annihilators([1], BETA3)
    assert ann.P == x * Dx + y * Dy - Fraction(31, 30)
    b2, b3 = Fraction(1, 3), Fraction(1, 5)
    # y(x+y) Dy - b2 (x+y) - b3 y, expanded by hand
    expected = y * x * Dy + y * y * Dy - x.scale(b2) - y.scale(b2) - y.scale(b3)
    assert ann.Q == expected


def test_annihilators_reject_bad_c():
    with pytest.raises(ValueError):
        build_annihilators([0], BETA3)
    with pytest.raises(ValueError):
        build_annihilators([2, 2], BETA3 + (Fraction(1, 7),))


def test_weight_components():
    assert weight_component(x * Dx + x, 0) == x * Dx
    ann = build_annihilators([1, 2, 3], BETA3 + (Fraction(1, 7), Fraction(2, 9)))
    assert weight_component(ann.P, 0) == ann.P
    assert weight_component(ann.Q, ann.m - 2) == ann.Q
    assert ann.Q.weights() == {ann.m - 2}


def test_normal_form_of_P():
    ann = build_annihilators([1], BETA3)
    S1, S2, R = normal_form(ann.P, ann)
    assert (S1, S2, R) == (one, WeylOp(), WeylOp())


def test_normal_form_of_xDx():
    ann = build_annihilators([1, 3], BETA3 + (Fraction(3, 4),))
    S1, S2, R = normal_form(x * Dx, ann)
    assert R == ann.beta_sum - y * Dy
    assert S1 * ann.P + S2 * ann.Q + R == x * Dx


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_normal_form_of_Q_leading_monomial(m):
    c = list(range(1, m - 1))
    beta = [Fraction(1, n + 2) for n in range(m)]
    ann = build_annihilators(c, beta)
    F = WeylOp.monomial(i=m - 1, l=1)
    S1, S2, R = normal_form(F, ann)
    assert S1 * ann.P + S2 * ann.Q + R == F
    assert all(in_N(mono, m) for mono in R.terms)


@settings(max_examples=50, deadline=None)
@given(weyl_ops(max_degree=6, max_terms=5))
def test_normal_form_reconstruction_and_shape(F):
    ann = build_annihilators([Fraction(-2, 3), 5], [Fraction(1, 2), Scalar(1, 1), Fraction(-4, 3), Fraction(2, 7)])
    S1, S2, R = normal_form(F, ann)
    assert S1 * ann.P + S2 * ann.Q + R == F
    assert all(in_N(mono, 4) for mono in R.terms)


@settings(max_examples=30, deadline=None)
@given(weyl_ops(max_degree=6, max_terms=5))
def test_weight_zero_remainders_lie_in_span(F):
    F0 = weight_component(F, 0)
    ann = build_annihilators([3], [Fraction(1, 2), Fraction(1, 3), Fraction(5, 7)])
    R = normal_form(F0, ann).R
    assert in_N0_span(R, 3)


def test_initial_term_compatible_with_monomial_multiplication():
    ann = build_annihilators([1, 2], [Fraction(1, 2)] * 4)
    for gen in (ann.P, ann.Q):
        lead, _ = initial_term(gen)
        for mu in [(0, 0, 0, 0), (1, 2, 0, 1), (0, 3, 2, 0), (2, 0, 1, 3)]:
            prod = WeylOp({mu: 1}) * gen
            got, coeff = initial_term(prod)
            assert got == tuple(a + b for a, b in zip(mu, lead))
            assert coeff == 1


class TestWeightZeroSpan:
    def test_first_block(self):
        assert in_N0_span((y * Dx) ** 2, 3)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_power_of_euler_y_beyond_bound(self, m):
        assert not in_N0_span((y * Dy) ** (m - 1), m)
        assert in_N0_span((y * Dy) ** (m - 2), m)

    def test_constant(self):
        assert in_N0_span(one, 3)

    def test_mixed_block_bound(self):
        assert in_N0_span((y * Dx) * (y * Dy), 4)
        assert not in_N0_span((y * Dx) * (y * Dy), 3)

    def test_non_homogeneous_rejected(self):
        with pytest.raises(NotHomogeneousError):
            in_N0_span(x * Dx + x, 3)

    def test_monomials_of_N0_are_in_span(self):
        # every weight-0 monomial allowed by the normal-form predicate is in the span
        m = 4
        for i in range(4):
            for j in range(4):
                for k in range(4):
                    l = i + j - k
                    if 0 <= l <= 4 and in_N((i, j, k, l), m):
                        assert in_N0_span(WeylOp.monomial(i, j, k, l), m), (i, j, k, l)


@pytest.mark.parametrize(
    "text",
    ["y^2*x*Dx - 3", "x*Dx + y*Dy - 31/30", "(1/2+1i)*y*Dy - 1/2i*x", "-Dy^3 + 2", "0"],
)
def test_printer_parser_round_trip(text):
    op = parse_op(text)
    assert str(op) == text
    assert parse_op(str(op)) == op


def test_parser_multiplies_in_written_order():
    assert parse_op("Dx*x") == x * Dx + 1
    assert parse_op("Dy*y^2") == y * y * Dy + y.scale(2)


@settings(max_examples=50, deadline=None)
@given(weyl_ops(max_degree=5))
def test_random_round_trip(A):
    assert parse_op(str(A)) == A


def test_from_poly():
    p = Poly2({(1, 2): 3})
    assert WeylOp.from_poly(p, l=1) == WeylOp({(2, 1, 0, 1): 3})
