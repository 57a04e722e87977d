"""Number and supports of the decomposition factors of the twisted module (n = 2)."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arrangement import Arrangement, integer_count, nbc_subsets, validate
from .scalar import ZERO, Scalar

__all__ = [
    "CaseTag",
    "FactorSupport",
    "DecompositionReport",
    "count_factors",
    "factor_supports",
    "restricted_exponent",
    "normal_crossings_count",
    "external_product_count",
    "multiplicity_bound",
    "ConeDescriptor",
    "image_basis_descriptor",
    "closed_form_count",
    "ORIGIN_COUNT_NOTE",
]

ORIGIN_COUNT_NOTE = (
    "origin factors counted as m-2: each integer line adds one origin factor "
    "and the non-integer part adds m-k-2, giving total m+k-1"
)


class CaseTag(str, enum.Enum):
    AllInteger = "AllInteger"
    SumInteger = "SumInteger"
    SumNonInteger = "SumNonInteger"


@dataclass(frozen=True)
class FactorSupport:
    kind: str  # "Plane", "Line" or "Origin"
    index: int | None = None  # 1-based form index for lines
    multiplicity: int = 1

    def __post_init__(self):
        if self.kind not in ("Plane", "Line", "Origin"):
            raise ValueError(f"unknown support kind {self.kind!r}")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.kind == "Plane" and self.multiplicity != 1:
            raise ValueError("the plane factor is unique")
        if (self.kind == "Line") != (self.index is not None):
            raise ValueError("exactly the line supports carry an index")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.index is not None:
            out["index"] = self.index
        if self.kind == "Origin":
            out["multiplicity"] = self.multiplicity
        return out


@dataclass(frozen=True)
class DecompositionReport:
    count: int
    factors: tuple[FactorSupport, ...]
    case_tag: CaseTag
    k: int
    m: int
    beta_H: Scalar | None = None
    nbc: tuple[tuple[int, ...], ...] | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.count != sum(f.multiplicity for f in self.factors):
            raise ValueError("count must equal the total multiplicity of the factors")

    def support_multiset(self) -> dict[tuple[str, int | None], int]:
        out: dict = {}
        for f in self.factors:
            key = (f.kind, f.index)
            out[key] = out.get(key, 0) + f.multiplicity
        return out

    def to_json(self) -> dict:
        out = {
            "count": self.count,
            "case": self.case_tag.value,
            "k": self.k,
            "beta_H": None if self.beta_H is None else str(self.beta_H),
            "factors": [f.to_json() for f in self.factors],
            "notes": list(self.notes),
        }
        if self.nbc is not None:
            out["nbc"] = [list(s) for s in self.nbc]
        return out

    def render(self) -> str:
        lines = [f"c(M) = {self.count}   [{self.case_tag.value}, m={self.m}, k={self.k}]"]
        if self.beta_H is not None:
            lines.append(f"restricted exponent beta_H = {self.beta_H}")
        for f in self.factors:
            if f.kind == "Plane":
                lines.append("  1 factor supported on the whole plane")
            elif f.kind == "Line":
                lines.append(f"  1 factor supported on line H_{f.index}")
            else:
                lines.append(f"  {f.multiplicity} factor(s) supported at the origin")
        if self.nbc is not None:
            shown = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.nbc)
            lines.append(f"NBC subsets ({len(self.nbc)}): {shown}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines)


def closed_form_count(m: int, k: int, sum_is_integer: bool) -> int:
    """2m if every exponent is an integer, else m+k-1 or k+1 by integrality of the sum."""
    if k == m:
        return 2 * m
    return m + k - 1 if sum_is_integer else k + 1


def factor_supports(case_tag: CaseTag, m: int, integer_indices) -> list[FactorSupport]:
    """Support accounting; ``integer_indices`` may be a count k or the index list."""
    if isinstance(integer_indices, int):
        idx = list(range(1, integer_indices + 1))
    else:
        idx = sorted(integer_indices)
    k = len(idx)
    case_tag = CaseTag(case_tag)
    if k > m:
        raise ValueError("k cannot exceed m")
    if case_tag is CaseTag.AllInteger:
        if k != m:
            raise ValueError("AllInteger needs k == m")
        idx = list(range(1, m + 1))
        origin = m - 1
    elif case_tag is CaseTag.SumNonInteger:
        if k == m:
            raise ValueError("SumNonInteger needs k < m")
        origin = 0
    else:
        if k == m:
            raise ValueError("SumInteger needs k < m")
        if m - k == 1:
            raise ValueError("a single non-integer exponent cannot have an integer sum")
        origin = m - 2
    out = [FactorSupport("Plane")] + [FactorSupport("Line", index=i) for i in idx]
    if origin:
        out.append(FactorSupport("Origin", multiplicity=origin))
    return out


def restricted_exponent(arr: Arrangement, integer_indices=None) -> Scalar:
    """Sum of the non-integer exponents: the twist seen on an integer line."""
    if integer_indices is None:
        _, integer_indices = integer_count(arr)
    ints = set(integer_indices)
    if len(ints) >= arr.m:
        raise ValueError("no non-integer exponents to restrict")
    return sum((b for n, b in enumerate(arr.beta, start=1) if n not in ints), ZERO)


def count_factors(arr: Arrangement) -> DecompositionReport:
    validate(arr)
    m = arr.m
    k, idx = integer_count(arr)
    if k == m:
        factors = factor_supports(CaseTag.AllInteger, m, idx)
        return DecompositionReport(
            count=closed_form_count(m, k, True),
            factors=tuple(factors),
            case_tag=CaseTag.AllInteger,
            k=k,
            m=m,
            nbc=tuple(nbc_subsets(m)),
        )
    beta_H = restricted_exponent(arr, idx)
    sum_int = arr.beta_sum.is_integer()
    if beta_H.is_integer() != sum_int:  # pragma: no cover - integers cannot change the class
        raise ArithmeticError("restricted exponent and total exponent disagree on integrality")
    tag = CaseTag.SumInteger if sum_int else CaseTag.SumNonInteger
    factors = factor_supports(tag, m, idx)
    notes = (ORIGIN_COUNT_NOTE,) if tag is CaseTag.SumInteger and k > 0 else ()
    return DecompositionReport(
        count=closed_form_count(m, k, sum_int),
        factors=tuple(factors),
        case_tag=tag,
        k=k,
        m=m,
        beta_H=beta_H,
        notes=notes,
    )


def normal_crossings_count(k: int, m: int, n: int) -> int:
    """Coordinate hyperplanes x_1..x_m in C^n with k integer exponents: 2^k factors."""
    if m > n:
        raise ValueError("normal crossings needs m <= n")
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    return 2**k


def external_product_count(cM: int, cN: int) -> int:
    if cM < 1 or cN < 1:
        raise ValueError("factor counts are positive")
    return cM * cN


def multiplicity_bound(m: int, n: int) -> int:
    return (m + 1) ** n


@dataclass(frozen=True)
class ConeDescriptor:
    """Monomials ``u^a v^b`` spanning an image, with sign constraints on a, b.

    ``variables`` names the two coordinate forms; ``constraints`` pairs each
    with ``">=0"`` or ``"<=-1"``.
    """

    subset: tuple[int, ...]
    variables: tuple[str, str]
    constraints: tuple[str, str]

    def contains(self, a: int, b: int) -> bool:
        return all((e >= 0) if c == ">=0" else (e <= -1) for e, c in zip((a, b), self.constraints))

    def __str__(self):
        (u, v), (cu, cv) = self.variables, self.constraints
        return f"span{{ {u}^a {v}^b : a{cu}, b{cv} }}"


def image_basis_descriptor(S, m: int) -> ConeDescriptor:
    """Monomial cone spanning the image of the simple factor indexed by an NBC subset.

    Forms are in normalized coordinates (a1 = x, a2 = y). For a pair {1, i}
    both exponents are negative; for a singleton {i} the form carries a
    negative exponent and a complementary coordinate (y for a1, x otherwise)
    a non-negative one; the empty set gives the polynomial ring.
    """
    S = tuple(sorted(S))
    if S not in nbc_subsets(m):
        raise ValueError(f"{S} is not an NBC subset for m={m}")
    if not S:
        return ConeDescriptor(S, ("x", "y"), (">=0", ">=0"))
    if len(S) == 1:
        (i,) = S
        comp = "y" if i == 1 else "x"
        return ConeDescriptor(S, (comp, f"a{i}"), (">=0", "<=-1"))
    return ConeDescriptor(S, (f"a{S[0]}", f"a{S[1]}"), ("<=-1", "<=-1"))
