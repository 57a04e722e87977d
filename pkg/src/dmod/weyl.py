"""The Weyl algebra A2 = C<x, y, Dx, Dy> over Q(i).

Monomials are stored as exponent tuples ``(i, j, k, l)`` for the normal
ordered word ``y^i x^j Dx^k Dy^l``. A1 is the slice with only x, Dx (or
only y, Dy) exponents nonzero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, NamedTuple, Sequence

from ._linalg import solve_in_span
from .poly import Poly2, _join_terms
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "WeylMonomial",
    "WeylOp",
    "AnnPair",
    "NormalFormResult",
    "monomial_key",
    "compare_monomials",
    "weyl_mul",
    "initial_term",
    "build_annihilators",
    "normal_form",
    "in_N",
    "weight_component",
    "lemma41_generators",
    "in_N0_span",
    "parse_op",
    "NotHomogeneousError",
]


class WeylMonomial(NamedTuple):
    i: int = 0  # y
    j: int = 0  # x
    k: int = 0  # Dx
    l: int = 0  # Dy

    @property
    def weight(self) -> int:
        return self.i + self.j - self.k - self.l

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k + self.l


class NotHomogeneousError(ValueError):
    pass


def monomial_key(m) -> tuple:
    """Sort key for the graded reverse lexicographic order with y > x > Dx > Dy.

    Higher total degree wins; on ties the monomial whose last nonzero
    exponent difference is negative is the larger one.
    """
    i, j, k, l = m
    return (i + j + k + l, -l, -k, -j, -i)


def compare_monomials(a, b) -> int:
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or less than ``b``."""
    ka, kb = monomial_key(a), monomial_key(b)
    return (ka > kb) - (ka < kb)


def _falling(n: int, t: int) -> int:
    out = 1
    for s in range(t):
        out *= n - s
    return out


@lru_cache(maxsize=1 << 16)
def _mono_mul(a: tuple, b: tuple) -> tuple:
    i1, j1, k1, l1 = a
    i2, j2, k2, l2 = b
    # Dx^k1 x^j2 = sum_t C(k1,t) j2!/(j2-t)! x^(j2-t) Dx^(k1-t), same for Dy^l1 y^i2
    xs = [(t, comb(k1, t) * _falling(j2, t)) for t in range(min(k1, j2) + 1)]
    ys = [(s, comb(l1, s) * _falling(i2, s)) for s in range(min(l1, i2) + 1)]
    out = []
    for s, cy in ys:
        for t, cx in xs:
            out.append(((i1 + i2 - s, j1 + j2 - t, k1 + k2 - t, l1 + l2 - s), cx * cy))
    return tuple(out)


class WeylOp:
    """Finite sum of normal-ordered monomials with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: dict[tuple, Scalar] = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if c:
                    m = tuple(int(v) for v in m)
                    if len(m) != 4 or min(m) < 0:
                        raise ValueError(f"bad Weyl monomial {m}")
                    clean[m] = clean.get(m, ZERO) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _from_clean(cls, terms: dict) -> WeylOp:
        op = object.__new__(cls)
        op.terms = terms
        return op

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> WeylOp:
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def monomial(cls, i=0, j=0, k=0, l=0, c=1) -> WeylOp:
        return cls({(i, j, k, l): c})

    @classmethod
    def from_poly(cls, p: Poly2, k: int = 0, l: int = 0) -> WeylOp:
        """``p(x, y) * Dx^k * Dy^l``."""
        return cls._from_clean({(dy, dx, k, l): c for (dx, dy), c in p.terms.items()})

    x = classmethod(lambda cls: cls.monomial(j=1))
    y = classmethod(lambda cls: cls.monomial(i=1))
    Dx = classmethod(lambda cls: cls.monomial(k=1))
    Dy = classmethod(lambda cls: cls.monomial(l=1))

    # -- ring structure -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        _accumulate(out, other.terms.items())
        return WeylOp._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp._from_clean({m: -c for m, c in self.terms.items()})

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
        if isinstance(other, WeylOp):
            return weyl_mul(self, other)
        c = as_scalar(other, strict=False)
        if c is None:
            if isinstance(other, Poly2):
                return weyl_mul(self, WeylOp.from_poly(other))
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        if isinstance(other, Poly2):
            return weyl_mul(WeylOp.from_poly(other), self)
        c = as_scalar(other, strict=False)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def scale(self, c) -> WeylOp:
        c = as_scalar(c)
        if not c:
            return WeylOp()
        return WeylOp._from_clean({m: v * c for m, v in self.terms.items()})

    def __pow__(self, n: int) -> WeylOp:
        if n < 0:
            raise ValueError("negative power in the Weyl algebra")
        result = WeylOp.const(1)
        for _ in range(n):
            result = weyl_mul(result, self)
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- gradings -----------------------------------------------------------
    def weights(self) -> set[int]:
        return {i + j - k - l for i, j, k, l in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def order(self) -> int:
        """Order as a differential operator (highest Dx+Dy power)."""
        return max((m[2] + m[3] for m in self.terms), default=-1)

    def coeff(self, m) -> Scalar:
        return self.terms.get(tuple(m), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    # -- text ---------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        return _join_terms((c, _mono_str(m)) for m, c in self.sorted_terms())

    def __repr__(self):
        return f"WeylOp('{self}')"


def _accumulate(out: dict, items: Iterable) -> None:
    for m, c in items:
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]


def _coerce(v):
    if isinstance(v, WeylOp):
        return v
    if isinstance(v, Poly2):
        return WeylOp.from_poly(v)
    c = as_scalar(v, strict=False)
    return None if c is None else WeylOp.const(c)


def _mono_str(m) -> str:
    parts = []
    for name, d in zip(("y", "x", "Dx", "Dy"), m):
        if d == 1:
            parts.append(name)
        elif d > 1:
            parts.append(f"{name}^{d}")
    return "*".join(parts)


def weyl_mul(A: WeylOp, B: WeylOp) -> WeylOp:
    """Normal-ordered product ``A*B`` using [Dx, x] = [Dy, y] = 1."""
    out: dict[tuple, Scalar] = {}
    for ma, ca in A.terms.items():
        for mb, cb in B.terms.items():
            cab = ca * cb
            for m, n in _mono_mul(ma, mb):
                v = cab if n == 1 else cab * n
                s = out.get(m)
                out[m] = v if s is None else s + v
    return WeylOp._from_clean({m: c for m, c in out.items() if c})


def initial_term(A: WeylOp) -> tuple[WeylMonomial, Scalar]:
    if not A.terms:
        raise ValueError("the zero operator has no initial term")
    m = max(A.terms, key=monomial_key)
    return WeylMonomial(*m), A.terms[m]


def weight_component(A: WeylOp, w: int) -> WeylOp:
    return WeylOp._from_clean({m: c for m, c in A.terms.items() if m[0] + m[1] - m[2] - m[3] == w})


# ---------------------------------------------------------------------------
# annihilators of alpha^beta for a normalized arrangement


@dataclass(frozen=True)
class AnnPair:
    P: WeylOp
    Q: WeylOp
    m: int
    beta: tuple[Scalar, ...]
    c: tuple[Scalar, ...] = field(default=())

    @property
    def beta_sum(self) -> Scalar:
        return sum(self.beta, ZERO)


def _normalized_forms(c: Sequence[Scalar]) -> list[Poly2]:
    x, y = Poly2.x(), Poly2.y()
    return [x, y] + [x.scale(ci) + y for ci in c]


def build_annihilators(arr, beta=None) -> AnnPair:
    """P = x Dx + y Dy - |beta| and Q = (prod_{j>=2} a_j) Dy - sum_i beta_i prod_{j!=i} a_j.

    ``arr`` is a :class:`~dmod.arrangement.NormalizedArrangement` (its ``c``
    gives the forms ``c_i x + y``) or directly the sequence ``(c_3, ..., c_m)``.
    ``beta`` defaults to the arrangement's exponents.
    """
    if hasattr(arr, "c"):
        c = tuple(arr.c)
        if beta is None:
            beta = arr.beta
    else:
        c = tuple(as_scalar(v) for v in arr)
    if beta is None:
        raise ValueError("beta is required when passing bare c-values")
    beta = tuple(as_scalar(b) for b in beta)
    m = len(c) + 2
    if len(beta) != m:
        raise ValueError(f"need {m} exponents for {m} forms, got {len(beta)}")
    for idx, ci in enumerate(c):
        if not ci:
            raise ValueError("normalized arrangement requires nonzero c_i")
        if ci in c[idx + 1:]:
            raise ValueError("normalized arrangement requires distinct c_i")

    forms = _normalized_forms(c)
    total = sum(beta, ZERO)
    P = WeylOp({(0, 1, 1, 0): 1, (1, 0, 0, 1): 1, (0, 0, 0, 0): -total})

    tail = forms[1:]  # a_2 .. a_m
    prod_all = Poly2.const(1)
    for f in tail:
        prod_all = prod_all * f
    rest = Poly2()
    for idx in range(len(tail)):
        term = Poly2.const(beta[idx + 1])
        for jdx, f in enumerate(tail):
            if jdx != idx:
                term = term * f
        rest = rest + term
    Q = WeylOp.from_poly(prod_all, l=1) - WeylOp.from_poly(rest)
    return AnnPair(P=P, Q=Q, m=m, beta=beta, c=c)


# ---------------------------------------------------------------------------
# division against {P, Q}


@dataclass(frozen=True)
class NormalFormResult:
    S1: WeylOp
    S2: WeylOp
    R: WeylOp

    def __iter__(self):
        return iter((self.S1, self.S2, self.R))


def in_N(mono, m: int) -> bool:
    """Monomial lies in the normal-form complement: jk = 0 and (l != 0 => i <= m-2)."""
    i, j, k, l = mono
    return j * k == 0 and (l == 0 or i <= m - 2)


def normal_form(F: WeylOp, gens: AnnPair) -> NormalFormResult:
    """Divide ``F`` by ``{P, Q}``: ``F == S1*P + S2*Q + R`` with R fully reduced.

    Every monomial of the remainder avoids the initial terms of P and Q
    (x Dx and y^(m-1) Dy). When both divide, P is used.
    """
    P, Q = gens.P, gens.Q
    inP, lcP = initial_term(P)
    inQ, lcQ = initial_term(Q)
    invP, invQ = lcP.inverse(), lcQ.inverse()

    work = dict(F.terms)
    S1: dict = {}
    S2: dict = {}
    R: dict = {}
    while work:
        mono = max(work, key=monomial_key)
        c = work[mono]
        if all(a >= b for a, b in zip(mono, inP)):
            q = tuple(a - b for a, b in zip(mono, inP))
            f = c * invP
            _accumulate(S1, [(q, f)])
            _accumulate(work, ((mm, -v) for mm, v in weyl_mul(WeylOp._from_clean({q: f}), P).terms.items()))
        elif all(a >= b for a, b in zip(mono, inQ)):
            q = tuple(a - b for a, b in zip(mono, inQ))
            f = c * invQ
            _accumulate(S2, [(q, f)])
            _accumulate(work, ((mm, -v) for mm, v in weyl_mul(WeylOp._from_clean({q: f}), Q).terms.items()))
        else:
            R[mono] = c
            del work[mono]
    return NormalFormResult(WeylOp._from_clean(S1), WeylOp._from_clean(S2), WeylOp._from_clean(R))


# ---------------------------------------------------------------------------
# weight-zero normal forms


def lemma41_generators(m: int, max_order: int) -> list[tuple[str, WeylOp]]:
    """Spanning operators of the weight-0 normal-form space up to an order bound.

    Three families: (y Dx)^k for k >= 1; (y Dx)^k (y Dy)^l for k, l >= 1 with
    k + l <= m-2; and (y Dy)^l (x Dy)^k for l <= m-2, k >= 0. Labels record
    the family and exponents.
    """
    yDx = WeylOp.monomial(i=1, k=1)
    yDy = WeylOp.monomial(i=1, l=1)
    xDy = WeylOp.monomial(j=1, l=1)
    pw = _PowerCache()
    out: list[tuple[str, WeylOp]] = []
    for k in range(1, max_order + 1):
        out.append((f"(yDx)^{k}", pw(yDx, k)))
    for k in range(1, max_order + 1):
        for l in range(1, max_order + 1 - k):
            if k + l <= m - 2:
                out.append((f"(yDx)^{k}(yDy)^{l}", weyl_mul(pw(yDx, k), pw(yDy, l))))
    for l in range(0, min(m - 2, max_order) + 1):
        for k in range(0, max_order - l + 1):
            out.append((f"(yDy)^{l}(xDy)^{k}", weyl_mul(pw(yDy, l), pw(xDy, k))))
    return out


class _PowerCache:
    def __init__(self):
        self._cache: dict = {}

    def __call__(self, op: WeylOp, n: int) -> WeylOp:
        key = (id(op), n)
        if key not in self._cache:
            self._cache[key] = WeylOp.const(1) if n == 0 else weyl_mul(self(op, n - 1), op)
        return self._cache[key]


def in_N0_span(A: WeylOp, m: int, return_coefficients: bool = False):
    """Decide whether a weight-0 operator lies in the span of :func:`lemma41_generators`.

    Generators of order ``r`` have total degree ``2r`` and pairwise distinct top
    monomials, so only those with ``2r <= deg A`` can occur; membership is an
    exact linear solve over that finite family.
    """
    if A.weights() - {0}:
        raise NotHomogeneousError("in_N0_span expects a homogeneous weight-0 operator")
    if not A.terms:
        return (True, []) if return_coefficients else True
    gens = lemma41_generators(m, A.degree() // 2)
    coeffs = solve_in_span([g.terms for _, g in gens], A.terms)
    ok = coeffs is not None
    if return_coefficients:
        combo = [(label, c) for (label, _), c in zip(gens, coeffs)] if ok else None
        return ok, combo
    return ok


# ---------------------------------------------------------------------------
# text parser, e.g. "y^2*x*Dx - 3" or "(1/2+1i)*y*Dy"

_TOKEN = re.compile(
    r"\s*(?:(?P<lpar>\()|(?P<rpar>\))|(?P<op>[+\-*])|(?P<gen>Dx|Dy|x|y)(?:\^(?P<exp>\d+))?"
    r"|(?P<num>\d+(?:/\d+)?i?))"
)


class OpParseError(ValueError):
    pass


def parse_op(text: str) -> WeylOp:
    """Parse an operator written as a sum of products.

    Factors are multiplied in the Weyl algebra in the order written, so
    ``"Dx*x"`` parses to ``x*Dx + 1``.
    """
    from .scalar import parse_scalar

    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise OpParseError(f"unexpected input at {text[pos:]!r}")
        pos = mt.end()
        tokens.append(mt)
    if not tokens:
        raise OpParseError("empty operator")

    idx = 0
    total = WeylOp()

    def factor():
        nonlocal idx
        if idx >= len(tokens):
            raise OpParseError("expected a factor")
        t = tokens[idx]
        if t.group("gen"):
            idx += 1
            g = {"y": (1, 0, 0, 0), "x": (0, 1, 0, 0), "Dx": (0, 0, 1, 0), "Dy": (0, 0, 0, 1)}[t.group("gen")]
            e = int(t.group("exp") or 1)
            return WeylOp({g: 1}) ** e
        if t.group("num"):
            idx += 1
            return WeylOp.const(parse_scalar(t.group("num")))
        if t.group("lpar"):
            close = next((n for n in range(idx, len(tokens)) if tokens[n].group("rpar")), None)
            if close is None:
                raise OpParseError("unbalanced parenthesis")
            inner = "".join(tok.group(0).strip() for tok in tokens[idx + 1 : close])
            idx = close + 1
            return WeylOp.const(parse_scalar(inner))
        raise OpParseError(f"unexpected token {t.group(0)!r}")

    first = True
    while idx < len(tokens):
        sign = 1
        t = tokens[idx]
        if t.group("op") in ("+", "-"):
            sign = -1 if t.group("op") == "-" else 1
            idx += 1
        elif not first:
            raise OpParseError(f"expected + or - before {t.group(0)!r}")
        term = factor()
        while idx < len(tokens) and tokens[idx].group("op") == "*":
            idx += 1
            term = weyl_mul(term, factor())
        total = total + (term if sign == 1 else -term)
        first = False
    return total
