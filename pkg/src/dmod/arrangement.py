"""Central line arrangements in the plane with twisting exponents."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .poly import LinearForm, Poly2, pairwise_independent
from .scalar import ONE, ZERO, Scalar, ScalarParseError, as_scalar, parse_scalar

__all__ = [
    "ArrangementError",
    "DuplicateLine",
    "LengthMismatch",
    "ArrangementParseError",
    "Arrangement",
    "NormalizedArrangement",
    "validate",
    "normalize_beta",
    "integer_count",
    "normalize_coordinates",
    "nbc_subsets",
    "transform",
    "permute",
    "load_arrangement",
    "parse_arrangement",
]


class ArrangementError(ValueError):
    pass


class DuplicateLine(ArrangementError):
    pass


class LengthMismatch(ArrangementError):
    pass


class ArrangementParseError(ArrangementError):
    pass


@dataclass(frozen=True)
class Arrangement:
    forms: tuple[LinearForm, ...]
    beta: tuple[Scalar, ...]

    def __post_init__(self):
        forms = tuple(f if isinstance(f, LinearForm) else LinearForm(*f) for f in self.forms)
        object.__setattr__(self, "forms", forms)
        object.__setattr__(self, "beta", tuple(as_scalar(b) for b in self.beta))

    @property
    def m(self) -> int:
        return len(self.forms)

    @property
    def beta_sum(self) -> Scalar:
        return sum(self.beta, ZERO)

    def form_polys(self) -> list[Poly2]:
        return [f.as_poly() for f in self.forms]

    def to_json(self) -> dict:
        return {"forms": [f.to_pair() for f in self.forms], "beta": [str(b) for b in self.beta]}


def validate(arr: Arrangement) -> Arrangement:
    if arr.m < 1:
        raise ArrangementError("an arrangement needs at least one form")
    if len(arr.beta) != arr.m:
        raise LengthMismatch(f"{arr.m} forms but {len(arr.beta)} exponents")
    for a in range(arr.m):
        for b in range(a + 1, arr.m):
            if arr.forms[a].is_proportional(arr.forms[b]):
                raise DuplicateLine(f"forms {a + 1} and {b + 1} define the same line")
    return arr


def _mod_z(b: Scalar) -> Scalar:
    if b.is_integer():
        return ZERO
    return Scalar(b.re - b.floor_real(), b.im)


def normalize_beta(arr: Arrangement) -> Arrangement:
    """Canonical representative mod Z^m: integers go to 0, others to real part in [0, 1)."""
    return Arrangement(arr.forms, tuple(_mod_z(b) for b in arr.beta))


def integer_count(arr: Arrangement) -> tuple[int, list[int]]:
    """Number of integer exponents and their 1-based indices."""
    idx = [n + 1 for n, b in enumerate(arr.beta) if b.is_integer()]
    return len(idx), idx


@dataclass(frozen=True)
class NormalizedArrangement:
    """Arrangement expressed in coordinates where the forms read x, y, c_i x + y.

    ``change_of_basis`` is the matrix ``T`` whose rows are the first two forms,
    i.e. new coordinates ``(x', y') = T (x, y)``; ``scale[i]`` is the factor with
    ``form_i = scale[i] * (normalized form_i)``.
    """

    base: Arrangement
    change_of_basis: tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]
    c: tuple[Scalar, ...]
    scale: tuple[Scalar, ...]

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def beta(self) -> tuple[Scalar, ...]:
        return self.base.beta

    def forms(self) -> list[LinearForm]:
        return [LinearForm(1, 0), LinearForm(0, 1)] + [LinearForm(ci, 1) for ci in self.c]

    def as_arrangement(self) -> Arrangement:
        return Arrangement(tuple(self.forms()), self.base.beta)


def normalize_coordinates(arr: Arrangement) -> NormalizedArrangement:
    validate(arr)
    if arr.m < 2:
        raise ArrangementError("coordinate normalization needs at least two forms")
    f1, f2 = arr.forms[0], arr.forms[1]
    det = f1.a * f2.b - f1.b * f2.a
    if not det:
        raise DuplicateLine("first two forms are proportional")
    # write a*x + b*y = p*f1 + q*f2 by Cramer's rule
    c_vals, scales = [], [ONE, ONE]
    for f in arr.forms[2:]:
        p = (f.a * f2.b - f.b * f2.a) / det
        q = (f1.a * f.b - f1.b * f.a) / det
        if not p or not q:
            raise DuplicateLine(f"form {f} is proportional to one of the first two")
        c_vals.append(p / q)
        scales.append(q)
    if len(set(c_vals)) != len(c_vals):
        raise DuplicateLine("two forms become proportional after normalization")
    T = ((f1.a, f1.b), (f2.a, f2.b))
    return NormalizedArrangement(arr, T, tuple(c_vals), tuple(scales))


def nbc_subsets(m: int) -> list[tuple[int, ...]]:
    """No-broken-circuit subsets of a plane arrangement with m lines (1-based indices).

    The empty set, every singleton, and the pairs {1, i} for i = 2..m.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return [()] + [(i,) for i in range(1, m + 1)] + [(1, i) for i in range(2, m + 1)]


def transform(arr: Arrangement, T: Sequence[Sequence]) -> Arrangement:
    """Pull the forms back along the linear map ``(x, y) -> T (x, y)``.

    Each form ``a x + b y`` becomes ``(a, b) T``; for invertible ``T`` the
    resulting arrangement is isomorphic.
    """
    (t11, t12), (t21, t22) = [[as_scalar(v) for v in row] for row in T]
    if not (t11 * t22 - t12 * t21):
        raise ValueError("change of coordinates must be invertible")
    forms = tuple(LinearForm(f.a * t11 + f.b * t21, f.a * t12 + f.b * t22) for f in arr.forms)
    return Arrangement(forms, arr.beta)


def permute(arr: Arrangement, perm: Sequence[int]) -> Arrangement:
    """Reorder forms and exponents jointly; ``perm[new] = old`` (0-based)."""
    return Arrangement(tuple(arr.forms[p] for p in perm), tuple(arr.beta[p] for p in perm))


# ---------------------------------------------------------------------------
# JSON file format: {"forms": [["1","0"], ...], "beta": ["1/2", ...]}


def parse_arrangement(data) -> Arrangement:
    if not isinstance(data, dict):
        raise ArrangementParseError("arrangement must be a JSON object")
    unknown = set(data) - {"forms", "beta"}
    if unknown:
        raise ArrangementParseError(f"unknown keys: {sorted(unknown)}")
    missing = {"forms", "beta"} - set(data)
    if missing:
        raise ArrangementParseError(f"missing keys: {sorted(missing)}")
    forms, beta = data["forms"], data["beta"]
    if not isinstance(forms, list) or not isinstance(beta, list):
        raise ArrangementParseError("'forms' and 'beta' must be lists")
    try:
        parsed_forms = []
        for f in forms:
            if not isinstance(f, list) or len(f) != 2:
                raise ArrangementParseError(f"form {f!r} must be a pair [a, b]")
            try:
                parsed_forms.append(LinearForm(parse_scalar(f[0]), parse_scalar(f[1])))
            except ValueError as exc:
                if isinstance(exc, ScalarParseError):
                    raise
                raise ArrangementParseError(str(exc)) from exc
        parsed_beta = [parse_scalar(b) for b in beta]
    except ScalarParseError as exc:
        raise ArrangementParseError(str(exc)) from exc
    return validate(Arrangement(tuple(parsed_forms), tuple(parsed_beta)))


def load_arrangement(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ArrangementParseError(f"invalid JSON: {exc}") from exc
    return parse_arrangement(data)
