"""Re-checkable operator identities behind the ideal reductions.

Every identity is verified with :func:`weyl_mul` when it is constructed, so a
certificate object that exists is a certificate that holds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar
from .weyl import AnnPair, WeylOp, build_annihilators, weyl_mul

__all__ = [
    "Identity",
    "Conclusion",
    "MembershipChain",
    "Lemma43Result",
    "QuotientClass",
    "CertificateError",
    "PreconditionError",
    "lemma44_reduce",
    "lemma43_simplify",
    "lemma45_quotient_class",
    "quotient_class_from_chain",
]


class CertificateError(ArithmeticError):
    """An identity failed to re-verify."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Identity:
    """``sum(a * b for a, b in lhs) == rhs`` in A2."""

    lhs: tuple[tuple[WeylOp, WeylOp], ...]
    rhs: WeylOp
    label: str = ""

    def __post_init__(self):
        if not self.holds():
            raise CertificateError(f"identity does not hold: {self.render()}")

    def evaluate(self) -> WeylOp:
        total = WeylOp()
        for a, b in self.lhs:
            total = total + weyl_mul(a, b)
        return total

    def holds(self) -> bool:
        return self.evaluate() == self.rhs

    def render(self) -> str:
        parts = []
        for a, b in self.lhs:
            if a == WeylOp.const(1):
                parts.append(f"({b})")
            elif b == WeylOp.const(1):
                parts.append(f"({a})")
            else:
                parts.append(f"({a})*({b})")
        text = " + ".join(parts) + f" = {self.rhs}"
        return f"{self.label}: {text}" if self.label else text


class Conclusion(enum.Enum):
    IdealIsFull = "IdealIsFull"
    ReducedGenerators = "ReducedGenerators"


@dataclass(frozen=True)
class MembershipChain:
    steps: tuple[Identity, ...]
    conclusion: Conclusion
    generators: tuple[WeylOp, ...] = ()

    def verify(self) -> bool:
        return all(s.holds() for s in self.steps)

    def render(self) -> list[str]:
        lines = [s.render() for s in self.steps]
        if self.conclusion is Conclusion.IdealIsFull:
            lines.append("=> 1 lies in the ideal, J = A1")
        else:
            gens = ", ".join(str(g) for g in self.generators)
            lines.append(f"=> J generated by {gens}")
        return lines


def _yDy_minus(gamma: Scalar) -> WeylOp:
    return WeylOp.monomial(i=1, l=1) - gamma


def lemma44_reduce(gamma, k: int) -> MembershipChain:
    """Reduce ``J = A1 (y Dy - gamma) + A1 y^k`` in ``A1 = C<y, Dy>``.

    Uses ``Dy * y^r - y^(r-1) * (y Dy - gamma) = (r + gamma) y^(r-1)`` for
    r = k, k-1, ... while ``r + gamma != 0``. Reaching ``r = 0`` puts 1 in J.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    gamma = as_scalar(gamma)
    g = _yDy_minus(gamma)
    Dy = WeylOp.Dy()
    steps = []
    r = k
    while r >= 1:
        if (gamma + r).is_zero():
            return MembershipChain(tuple(steps), Conclusion.ReducedGenerators, (g, WeylOp.monomial(i=r)))
        lhs = ((Dy, WeylOp.monomial(i=r)), (-WeylOp.monomial(i=r - 1), g))
        rhs = WeylOp.monomial(i=r - 1, c=gamma + r)
        steps.append(Identity(lhs, rhs, label=f"y^{r - 1} in J"))
        r -= 1
    # y^0 = 1 is in J
    return MembershipChain(tuple(steps), Conclusion.IdealIsFull, (WeylOp.const(1),))


@dataclass(frozen=True)
class Lemma43Result:
    G: WeylOp
    gens: tuple[WeylOp, WeylOp, WeylOp]
    steps: tuple[Identity, ...]
    Q: WeylOp
    P: WeylOp

    def render(self) -> list[str]:
        return [s.render() for s in self.steps] + [
            "=> J = A2 x + A2 (" + str(self.gens[1]) + ") + A2 (" + str(self.gens[2]) + ")"
        ]


def lemma43_simplify(ann: AnnPair, beta_tilde: Sequence) -> Lemma43Result:
    """Simplify ``A2 x + A2 P + A2 Q`` for the shifted exponent ``beta_tilde``.

    Splits Q into its x-divisible part ``G x`` and the remainder
    ``y^(m-1) Dy - sum_{i>=2} b_i y^(m-2)``, then trades that remainder for
    ``y^(m-2)``, which needs ``b_1 + 1 != 0``.
    """
    bt = tuple(as_scalar(b) for b in beta_tilde)
    m = ann.m
    if m < 2:
        raise PreconditionError("need at least two forms")
    if len(bt) != m:
        raise ValueError("beta_tilde length must equal m")
    if (bt[0] + 1).is_zero():
        raise PreconditionError("requires beta_tilde_1 + 1 != 0")

    pair = build_annihilators(ann.c, bt)
    P, Q = pair.P, pair.Q
    total = sum(bt, ZERO)
    one = WeylOp.const(1)
    x = WeylOp.x()

    # x commutes with Dy and y, so a term y^i x^j Dy^l with j >= 1 is (y^i x^(j-1) Dy^l) x
    G = WeylOp._from_clean({(i, j - 1, k, l): c for (i, j, k, l), c in Q.terms.items() if j})
    tail_sum = sum(bt[1:], ZERO)
    tail = WeylOp.monomial(i=m - 1, l=1) - WeylOp.monomial(i=m - 2, c=tail_sum)
    euler_shift = WeylOp.monomial(i=1, l=1) - (total + 1)

    steps = (
        Identity(((G, x), (one, tail)), Q, label="Q split"),
        Identity(((WeylOp.Dx(), x), (one, euler_shift)), P, label="P rewritten"),
        Identity(
            ((one, tail), (-WeylOp.monomial(i=m - 2), euler_shift)),
            WeylOp.monomial(i=m - 2, c=bt[0] + 1),
            label="y^(m-2) in J",
        ),
    )
    gens = (x, euler_shift, WeylOp.monomial(i=m - 2))
    return Lemma43Result(G=G, gens=gens, steps=steps, Q=Q, P=P)


class QuotientClass(enum.Enum):
    Zero = "Zero"
    NonzeroSimple = "NonzeroSimple"


def lemma45_quotient_class(beta_tilde_sum, m: int) -> QuotientClass:
    """Class of ``A2 / (A2 x + A2 P + A2 Q)``: nonzero simple iff -(m-2) <= |b|+1 <= -1."""
    if m < 2:
        raise ValueError("m must be at least 2")
    s = as_scalar(beta_tilde_sum) + 1
    if s.is_integer() and -(m - 2) <= s.re <= -1:
        return QuotientClass.NonzeroSimple
    return QuotientClass.Zero


def quotient_class_from_chain(ann: AnnPair, beta_tilde: Sequence) -> tuple[QuotientClass, Lemma43Result, MembershipChain]:
    """Same classification, reached through the two reduction certificates.

    The quotient is ``C<x,Dx>/C<x,Dx>x`` (simple, nonzero) tensored with
    ``A1 / (A1 (y Dy - g) + A1 y^(m-2))``, g = |b|+1; it vanishes exactly when
    the second ideal is all of A1.
    """
    simp = lemma43_simplify(ann, beta_tilde)
    gamma = sum((as_scalar(b) for b in beta_tilde), ZERO) + 1
    chain = lemma44_reduce(gamma, ann.m - 2)
    cls = QuotientClass.Zero if chain.conclusion is Conclusion.IdealIsFull else QuotientClass.NonzeroSimple
    return cls, simp, chain
