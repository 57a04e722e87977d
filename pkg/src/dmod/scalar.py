"""Exact Gaussian rationals a + b*i with a, b in Q.

Rational parts are :class:`fractions.Fraction`, which already keeps
numerator/denominator reduced with a positive denominator.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = ["Scalar", "ScalarParseError", "as_scalar", "parse_scalar", "ZERO", "ONE", "I"]


class ScalarParseError(ValueError):
    pass


_F0 = Fraction(0)


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, _RationalABC)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


class Scalar:
    """Element of Q(i). Immutable; equality is field equality."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)
        self._hash = None

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> Scalar:
        # trusted constructor: both parts already Fractions
        s = object.__new__(cls)
        s.re = re
        s.im = im
        s._hash = None
        return s

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar._make(self.re * o.re, _F0)
        return Scalar._make(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if not self.im:
            return Scalar(1 / self.re)
        n = self.re * self.re + self.im * self.im
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> Scalar:
        return Scalar(self.re, -self.im)

    # -- comparison / hashing -----------------------------------------------
    def __eq__(self, other):
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.re) if not self.im else hash((self.re, self.im))
            self._hash = h
        return h

    # -- text ---------------------------------------------------------------
    def __str__(self):
        if not self.im:
            return str(self.re)
        im = f"{self.im}i"
        if not self.re:
            return im
        sign = "" if self.im < 0 else "+"
        return f"{self.re}{sign}{im}"

    def __repr__(self):
        return f"Scalar('{self}')"

    def floor_real(self) -> int:
        return self.re.numerator // self.re.denominator


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(v, strict: bool = True):
    """Coerce ints, Fractions and scalar strings to :class:`Scalar`."""
    if isinstance(v, Scalar):
        return v
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return Scalar(v)
    if isinstance(v, str) and strict:
        return parse_scalar(v)
    if strict:
        raise TypeError(f"cannot interpret {v!r} as a scalar")
    return None


_RAT = r"[+-]?\d+(?:/\d+)?"
_REAL_ONLY = re.compile(rf"^({_RAT})$")
_IMAG_ONLY = re.compile(rf"^({_RAT})i$")
_COMPLEX = re.compile(rf"^({_RAT})([+-]\d+(?:/\d+)?)i$")


def _parse_rat(s: str) -> Fraction:
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ScalarParseError(f"zero denominator in {s!r}")
    return Fraction(s)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, ``"p"``, ``"p/q+r/si"`` or ``"r/si"``.

    Whitespace is not allowed; anything else raises :class:`ScalarParseError`.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"expected a string, got {type(text).__name__}")
    if m := _REAL_ONLY.match(text):
        return Scalar(_parse_rat(m.group(1)))
    if m := _IMAG_ONLY.match(text):
        return Scalar(0, _parse_rat(m.group(1)))
    if m := _COMPLEX.match(text):
        return Scalar(_parse_rat(m.group(1)), _parse_rat(m.group(2)))
    raise ScalarParseError(f"malformed scalar {text!r}")
