"""Sparse bivariate polynomials over Q(i) and linear forms on the plane."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = ["Poly2", "LinearForm", "divides_linear", "pairwise_independent"]

Exp = tuple[int, int]


class Poly2:
    """Polynomial in x, y stored as ``{(deg_x, deg_y): coefficient}``.

    Zero coefficients are never stored, so the zero polynomial is the
    empty map and ``==`` is polynomial equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        clean: dict[Exp, Scalar] = {}
        if terms:
            for e, c in terms.items():
                c = as_scalar(c)
                if c:
                    clean[(int(e[0]), int(e[1]))] = c
        self.terms = clean

    @classmethod
    def _from_clean(cls, terms: dict[Exp, Scalar]) -> Poly2:
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> Poly2:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, dx: int, dy: int, c=1) -> Poly2:
        return cls({(dx, dy): c})

    @classmethod
    def x(cls) -> Poly2:
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> Poly2:
        return cls.monomial(0, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(a + b for a, b in self.terms)

    def coeff(self, dx: int, dy: int) -> Scalar:
        return self.terms.get((dx, dy), ZERO)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly2._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2._from_clean({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, Poly2):
            out: dict[Exp, Scalar] = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    e = (a1 + a2, b1 + b2)
                    s = out.get(e)
                    out[e] = c1 * c2 if s is None else s + c1 * c2
            return Poly2._from_clean({e: c for e, c in out.items() if c})
        c = as_scalar(other, strict=False)
        if c is None:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c) -> Poly2:
        c = as_scalar(c)
        if not c:
            return Poly2()
        return Poly2._from_clean({e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int) -> Poly2:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial_x(self) -> Poly2:
        return Poly2._from_clean({(a - 1, b): c * a for (a, b), c in self.terms.items() if a})

    def partial_y(self) -> Poly2:
        return Poly2._from_clean({(a, b - 1): c * b for (a, b), c in self.terms.items() if b})

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- text ---------------------------------------------------------------
    def sorted_terms(self):
        # graded, then by x-degree; printing order only
        return sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        return _join_terms((c, _mono_str(e)) for e, c in self.sorted_terms())

    def __repr__(self):
        return f"Poly2('{self}')"


def _coerce(v):
    if isinstance(v, Poly2):
        return v
    c = as_scalar(v, strict=False)
    return None if c is None else Poly2.const(c)


def _mono_str(e: Exp) -> str:
    parts = []
    for name, d in (("x", e[0]), ("y", e[1])):
        if d == 1:
            parts.append(name)
        elif d > 1:
            parts.append(f"{name}^{d}")
    return "*".join(parts)


def _coeff_str(c: Scalar) -> str:
    s = str(c)
    if c.im and c.re:
        return f"({s})"
    return s


def _join_terms(items: Iterable[tuple[Scalar, str]]) -> str:
    """Render ``coefficient*monomial`` pairs as ``a - b + c``."""
    out = []
    for c, mono in items:
        neg = c.is_real() and c.re < 0 or (not c.re and c.im < 0)
        mag = -c if neg else c
        if not mono:
            body = _coeff_str(mag)
        elif mag == ONE:
            body = mono
        else:
            body = f"{_coeff_str(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


@dataclass(frozen=True)
class LinearForm:
    """The form ``a*x + b*y``; user scaling is kept as given."""

    a: Scalar
    b: Scalar

    def __post_init__(self):
        a, b = as_scalar(self.a), as_scalar(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not a and not b:
            raise ValueError("the zero form does not define a line")

    def as_poly(self) -> Poly2:
        return Poly2({(1, 0): self.a, (0, 1): self.b})

    def normalized(self) -> LinearForm:
        """Representative whose first nonzero coefficient is 1."""
        lead = self.a if self.a else self.b
        return LinearForm(self.a / lead, self.b / lead)

    def is_proportional(self, other: LinearForm) -> bool:
        return (self.a * other.b - self.b * other.a).is_zero()

    def evaluate(self, x, y) -> Scalar:
        return self.a * as_scalar(x) + self.b * as_scalar(y)

    def to_pair(self) -> list[str]:
        return [str(self.a), str(self.b)]

    def __str__(self):
        return str(self.as_poly())


def divides_linear(L: LinearForm, p: Poly2) -> tuple[bool, Poly2 | None]:
    """Exact division of ``p`` by ``L``; returns ``(True, q)`` with ``p == L*q``.

    The form is treated as monic in x (or in y when it has no x term) and
    x-degree is eliminated term by term; ``p`` is divisible iff nothing is left.
    """
    if p.is_zero():
        return True, Poly2()
    if not L.a:
        if any(b == 0 for _, b in p.terms):
            return False, None
        inv = L.b.inverse()
        return True, Poly2._from_clean({(a, b - 1): c * inv for (a, b), c in p.terms.items()})

    slope = L.b / L.a  # L = a * (x + slope*y)
    rem = dict(p.terms)
    quot: dict[Exp, Scalar] = {}
    while True:
        top = max((e for e in rem if e[0] > 0), default=None, key=lambda e: e[0])
        if top is None:
            break
        c = rem.pop(top)
        dx, dy = top
        q_e = (dx - 1, dy)
        quot[q_e] = quot.get(q_e, ZERO) + c
        # subtract c * x^(dx-1) y^dy * (x + slope*y); the x^dx y^dy term already popped
        if slope:
            e2 = (dx - 1, dy + 1)
            v = rem.get(e2, ZERO) - c * slope
            if v:
                rem[e2] = v
            else:
                rem.pop(e2, None)
    if rem:
        return False, None
    inv = L.a.inverse()
    return True, Poly2({e: c * inv for e, c in quot.items()})


def pairwise_independent(forms: Iterable[LinearForm]) -> bool:
    forms = list(forms)
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            if forms[i].is_proportional(forms[j]):
                return False
    return True
