"""Elements p * alpha^(beta+N) of the twisted module and the A2-action on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import Arrangement, NormalizedArrangement
from .poly import LinearForm, Poly2, divides_linear
from .scalar import ZERO, Scalar, as_scalar
from .weyl import AnnPair, WeylOp

__all__ = [
    "TwistedElement",
    "generator",
    "apply_generator",
    "apply_op",
    "verify_annihilators",
    "AnnihilatorCheck",
    "valuation",
    "euler_reduction_a1",
]


class _Forms:
    """Per-arrangement cache of form polynomials and their powers."""

    _registry: dict = {}

    def __init__(self, arr: Arrangement):
        self.polys = arr.form_polys()
        self.dx = [p.partial_x() for p in self.polys]
        self.dy = [p.partial_y() for p in self.polys]
        self._pow: dict = {}

    @classmethod
    def of(cls, arr: Arrangement) -> _Forms:
        f = cls._registry.get(arr)
        if f is None:
            if len(cls._registry) > 256:
                cls._registry.clear()
            f = cls._registry[arr] = cls(arr)
        return f

    def power(self, i: int, n: int) -> Poly2:
        key = (i, n)
        if key not in self._pow:
            self._pow[key] = Poly2.const(1) if n == 0 else self.power(i, n - 1) * self.polys[i]
        return self._pow[key]


class TwistedElement:
    """``p * alpha^(beta + N)`` with no form dividing ``p``.

    Canonical form makes ``==`` module equality and the zero test trivial.
    """

    __slots__ = ("p", "N", "arr")

    def __init__(self, p: Poly2, N: Sequence[int], arr: Arrangement, canonical: bool = False):
        if len(N) != arr.m:
            raise ValueError("shift vector length must match the number of forms")
        self.arr = arr
        if canonical:
            self.p, self.N = p, tuple(N)
        else:
            self.p, self.N = _canonicalize(p, list(N), arr)

    @classmethod
    def generator(cls, arr: Arrangement) -> TwistedElement:
        return cls(Poly2.const(1), (0,) * arr.m, arr, canonical=True)

    @classmethod
    def zero(cls, arr: Arrangement) -> TwistedElement:
        return cls(Poly2(), (0,) * arr.m, arr, canonical=True)

    def is_zero(self) -> bool:
        return self.p.is_zero()

    def __bool__(self):
        return not self.p.is_zero()

    def __eq__(self, other):
        if not isinstance(other, TwistedElement):
            return NotImplemented
        return self.arr == other.arr and self.N == other.N and self.p == other.p

    def __hash__(self):
        return hash((self.N, self.p))

    def __add__(self, other: TwistedElement) -> TwistedElement:
        return combine([(1, self), (1, other)], self.arr)

    def __sub__(self, other: TwistedElement) -> TwistedElement:
        return combine([(1, self), (-1, other)], self.arr)

    def __neg__(self):
        return TwistedElement(-self.p, self.N, self.arr, canonical=True)

    def scale(self, c) -> TwistedElement:
        c = as_scalar(c)
        if not c:
            return TwistedElement.zero(self.arr)
        return TwistedElement(self.p.scale(c), self.N, self.arr, canonical=True)

    def render(self) -> str:
        """Diagnostic text ``(p) / (a1^1*a3^2) * alpha^beta`` with explicit shifts."""
        if self.is_zero():
            return "0"
        num = [f"a{i + 1}^{n}" for i, n in enumerate(self.N) if n > 0]
        den = [f"a{i + 1}^{-n}" for i, n in enumerate(self.N) if n < 0]
        out = f"({self.p})"
        if num:
            out += " * " + "*".join(num)
        if den:
            out += " / (" + "*".join(den) + ")"
        return out + " * alpha^beta"

    def __repr__(self):
        return f"TwistedElement({self.render()!r}, N={self.N})"


generator = TwistedElement.generator


def _canonicalize(p: Poly2, N: list[int], arr: Arrangement) -> tuple[Poly2, tuple[int, ...]]:
    if p.is_zero():
        return p, (0,) * arr.m
    for i, form in enumerate(arr.forms):
        while True:
            ok, q = divides_linear(form, p)
            if not ok:
                break
            p = q
            N[i] += 1
    return p, tuple(N)


def combine(items: Iterable[tuple[object, TwistedElement]], arr: Arrangement) -> TwistedElement:
    """Linear combination ``sum c * e`` over a common denominator."""
    items = [(as_scalar(c), e) for c, e in items if e and as_scalar(c)]
    if not items:
        return TwistedElement.zero(arr)
    if len(items) == 1:
        c, e = items[0]
        return e.scale(c)
    forms = _Forms.of(arr)
    base = [min(e.N[i] for _, e in items) for i in range(arr.m)]
    total = Poly2()
    for c, e in items:
        term = e.p.scale(c)
        for i in range(arr.m):
            d = e.N[i] - base[i]
            if d:
                term = term * forms.power(i, d)
        total = total + term
    return TwistedElement(total, base, arr)


def _derive(e: TwistedElement, var: int) -> TwistedElement:
    """Apply Dx (var=0) or Dy (var=1) using d(alpha^g) = sum g_i d(a_i)/a_i alpha^g."""
    if e.is_zero():
        return e
    arr = e.arr
    forms = _Forms.of(arr)
    dforms = forms.dx if var == 0 else forms.dy
    dp = e.p.partial_x() if var == 0 else e.p.partial_y()
    active = [i for i in range(arr.m) if dforms[i]]
    # common denominator prod_{i in active} a_i
    prod_active = Poly2.const(1)
    for i in active:
        prod_active = prod_active * forms.polys[i]
    num = dp * prod_active
    for i in active:
        coef = arr.beta[i] + e.N[i]
        if not coef:
            continue
        term = e.p * dforms[i]
        for t in active:
            if t != i:
                term = term * forms.polys[t]
        num = num + term.scale(coef)
    N = list(e.N)
    for i in active:
        N[i] -= 1
    return TwistedElement(num, N, arr)


def _times_monomial(e: TwistedElement, dx: int, dy: int) -> TwistedElement:
    if e.is_zero() or (dx == 0 and dy == 0):
        return e
    return TwistedElement(e.p * Poly2.monomial(dx, dy), list(e.N), e.arr)


def apply_generator(g: str, e: TwistedElement) -> TwistedElement:
    """Act by one of ``"x"``, ``"y"``, ``"Dx"``, ``"Dy"``."""
    if g == "x":
        return _times_monomial(e, 1, 0)
    if g == "y":
        return _times_monomial(e, 0, 1)
    if g == "Dx":
        return _derive(e, 0)
    if g == "Dy":
        return _derive(e, 1)
    raise ValueError(f"unknown generator {g!r}")


def apply_op(A: WeylOp, e: TwistedElement) -> TwistedElement:
    """Action of a Weyl operator; in ``y^i x^j Dx^k Dy^l`` the Dy's act first."""
    derivs: dict[tuple[int, int], TwistedElement] = {(0, 0): e}

    def d(k: int, l: int) -> TwistedElement:
        key = (k, l)
        if key not in derivs:
            derivs[key] = _derive(d(k, l - 1), 1) if k == 0 else _derive(d(k - 1, l), 0)
        return derivs[key]

    parts = []
    for (i, j, k, l), c in A.terms.items():
        parts.append((c, _times_monomial(d(k, l), j, i)))
    return combine(parts, e.arr)


@dataclass(frozen=True)
class AnnihilatorCheck:
    ok: bool
    residual_P: TwistedElement
    residual_Q: TwistedElement

    def __bool__(self):
        return self.ok


def verify_annihilators(ann: AnnPair, arr) -> AnnihilatorCheck:
    """Check ``P alpha^beta == 0`` and ``Q alpha^beta == 0`` exactly.

    ``arr`` is the normalized arrangement; the twist uses ``ann.beta``.
    """
    if isinstance(arr, NormalizedArrangement):
        forms = tuple(arr.forms())
    else:
        forms = tuple(arr.forms)
    target = Arrangement(forms, ann.beta)
    e = TwistedElement.generator(target)
    rP = apply_op(ann.P, e)
    rQ = apply_op(ann.Q, e)
    return AnnihilatorCheck(rP.is_zero() and rQ.is_zero(), rP, rQ)


def valuation(L: LinearForm, e: TwistedElement) -> int:
    """Largest k with ``e = r * L^k * alpha^beta``, r a ratio of polynomials prime to L."""
    if e.is_zero():
        raise ValueError("valuation of the zero element is undefined")
    base = 0
    for i, form in enumerate(e.arr.forms):
        if form.is_proportional(L):
            base = e.N[i]
            break
    p, mult = e.p, 0
    while True:
        ok, q = divides_linear(L, p)
        if not ok:
            break
        p, mult = q, mult + 1
    return base + mult


def euler_reduction_a1(f: Sequence[tuple[object, int]], beta1) -> TwistedElement:
    """Isolate the top monomial of ``f = sum a_i x^(beta+i)`` in one variable.

    Applies ``prod_{i<k} (x Dx - (beta + i))`` and returns the result, which
    equals ``a_k * k! * x^(beta+k)``.
    """
    beta1 = as_scalar(beta1)
    coeffs: dict[int, Scalar] = {}
    for c, s in f:
        if s < 0:
            raise ValueError("exponent shifts must be non-negative")
        coeffs[s] = coeffs.get(s, ZERO) + as_scalar(c)
    coeffs = {s: c for s, c in coeffs.items() if c}
    if not coeffs:
        raise ValueError("euler_reduction_a1 needs a nonzero element")
    arr = Arrangement((LinearForm(1, 0),), (beta1,))
    e = TwistedElement(Poly2({(s, 0): c for s, c in coeffs.items()}), (0,), arr)
    k = max(coeffs)
    xDx = WeylOp.monomial(j=1, k=1)
    for i in range(k):
        e = apply_op(xDx - (beta1 + i), e)
    return e
