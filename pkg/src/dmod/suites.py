"""Seeded verification suites run by ``dmod verify``.

Each suite returns a :class:`SuiteResult`; a failing suite carries the first
witness it found so the failure can be reproduced by hand.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import sampling as smp
from .action import TwistedElement, apply_op, euler_reduction_a1, generator, verify_annihilators
from .arrangement import Arrangement, normalize_beta, permute, transform
from .certs import Conclusion, QuotientClass, lemma44_reduce, lemma45_quotient_class, quotient_class_from_chain
from .decomp import CaseTag, closed_form_count, count_factors, normal_crossings_count
from .poly import Poly2
from .scalar import Scalar
from .weyl import WeylOp, build_annihilators, in_N, in_N0_span, lemma41_generators, normal_form, weyl_mul

__all__ = ["SuiteResult", "SUITES", "run_suites"]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.name}: {self.checked} checks"
        if self.witness:
            out += f"\n    witness: {self.witness}"
        return out


def suite_annihilators(rng: random.Random, corrupt_q: bool = False, count: int = 50) -> SuiteResult:
    for n in range(count):
        m = rng.randint(2, 6)
        na = smp.rand_normalized(rng, m)
        ann = build_annihilators(na)
        if corrupt_q:
            ann = type(ann)(ann.P, ann.Q + WeylOp.monomial(i=m - 2, c=Fraction(1, 7)), ann.m, ann.beta, ann.c)
        res = verify_annihilators(ann, na)
        if not res.ok:
            bad = res.residual_Q if res.residual_Q else res.residual_P
            return SuiteResult("annihilators", False, n + 1, f"c={list(map(str, na.c))} beta={list(map(str, ann.beta))} residual={bad.render()}")
    return SuiteResult("annihilators", True, count)


def suite_division(rng: random.Random, count: int = 100) -> SuiteResult:
    checked = 0
    for n in range(count):
        m = rng.choice((3, 4, 5))
        beta = [smp.rand_scalar(rng) for _ in range(m)]
        ann = build_annihilators(smp.rand_c_values(rng, m - 2), beta)
        F = smp.rand_weight0_op(rng, 6) if n % 2 else smp.rand_op(rng, 6)
        S1, S2, R = normal_form(F, ann)
        if weyl_mul(S1, ann.P) + weyl_mul(S2, ann.Q) + R != F:
            return SuiteResult("division", False, checked, f"reconstruction failed for F={F}")
        bad = [mono for mono in R.terms if not in_N(mono, m)]
        if bad:
            return SuiteResult("division", False, checked, f"remainder monomial {bad[0]} outside N (m={m})")
        if F.weights() == {0} and not in_N0_span(R, m):
            return SuiteResult("division", False, checked, f"weight-0 remainder {R} outside the span (m={m})")
        checked += 1
    return SuiteResult("division", True, checked)


def suite_lemma44(rng: random.Random) -> SuiteResult:
    checked = 0
    gammas = [Scalar(Fraction(n, 2)) for n in range(-12, 13)]
    for gamma, k in itertools.product(gammas, range(7)):
        chain = lemma44_reduce(gamma, k)
        stuck = gamma.is_integer() and -k <= gamma.re <= -1
        expect = Conclusion.ReducedGenerators if stuck else Conclusion.IdealIsFull
        if chain.conclusion is not expect or not chain.verify():
            return SuiteResult("lemma44", False, checked, f"gamma={gamma} k={k} -> {chain.conclusion.value}")
        if stuck and chain.generators[1] != WeylOp.monomial(i=int(-gamma.re)):
            return SuiteResult("lemma44", False, checked, f"gamma={gamma} k={k}: wrong reduced power")
        checked += 1
    return SuiteResult("lemma44", True, checked)


def suite_lemma45(rng: random.Random) -> SuiteResult:
    checked = 0
    sums = [Scalar(v) for v in range(-6, 3)] + [Scalar(Fraction(1, 2))]
    for s, m in itertools.product(sums, range(2, 7)):
        cls = lemma45_quotient_class(s, m)
        g = s + 1
        expect = QuotientClass.NonzeroSimple if g.is_integer() and -(m - 2) <= g.re <= -1 else QuotientClass.Zero
        # shifted exponent with first entry 1/2 (so b_1 + 1 != 0) and the requested sum
        bt = [Scalar(Fraction(1, 2))] + [Scalar(0)] * (m - 2) + [s - Fraction(1, 2)]
        ann = build_annihilators(smp.rand_c_values(rng, m - 2), bt)
        via_chain, _, _ = quotient_class_from_chain(ann, bt)
        if cls is not expect or via_chain is not cls:
            return SuiteResult("lemma45", False, checked, f"|b|={s} m={m}: {cls.value} vs chain {via_chain.value}")
        checked += 1
    return SuiteResult("lemma45", True, checked)


def rand_span_element(rng: random.Random, m: int, max_order: int) -> WeylOp:
    gens = lemma41_generators(m, max_order)
    while True:
        U = WeylOp()
        for _, g in rng.sample(gens, rng.randint(1, min(4, len(gens)))):
            U = U + g.scale(smp.rand_scalar(rng, 5))
        if U:
            return U


def suite_lemma42(rng: random.Random, count: int = 50) -> SuiteResult:
    for n in range(count):
        beta = [smp.rand_noninteger(rng) for _ in range(4)]
        na = smp.rand_normalized(rng, 4, beta=beta)
        U = rand_span_element(rng, 4, 3)
        if apply_op(U, generator(na.as_arrangement())).is_zero():
            return SuiteResult("lemma42", False, n, f"U={U} kills alpha^beta for c={list(map(str, na.c))}")
    return SuiteResult("lemma42", True, count)


def suite_counts(rng: random.Random) -> SuiteResult:
    checked = 0
    values = [Scalar(v) for v in (0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(-5, 2))]
    for m in range(1, 7):
        for beta in itertools.combinations_with_replacement(values, m):
            arr = smp.generic_arrangement(beta)
            rep = count_factors(arr)
            k = sum(1 for b in beta if b.is_integer())
            sum_int = sum(beta, Scalar(0)).is_integer()
            expect = 2 * m if k == m else (m + k - 1 if sum_int else k + 1)
            if rep.count != expect:
                return SuiteResult("counts", False, checked, f"beta={list(map(str, beta))}: {rep.count} != {expect}")
            if m <= 2 and rep.count != normal_crossings_count(k, m, 2):
                return SuiteResult("counts", False, checked, f"normal crossings mismatch at beta={list(map(str, beta))}")
            if count_factors(normalize_beta(arr)).count != rep.count:
                return SuiteResult("counts", False, checked, f"mod-Z normalization changed the count at {beta}")
            checked += 1
    return SuiteResult("counts", True, checked)


def suite_invariance(rng: random.Random, count: int = 20) -> SuiteResult:
    values = [0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(-5, 2), Fraction(2, 3)]
    for n in range(count):
        m = rng.randint(1, 6)
        arr = smp.generic_arrangement([Scalar(rng.choice(values)) for _ in range(m)])
        base = count_factors(arr)
        moved = count_factors(transform(arr, smp.rand_gl2(rng)))
        if (moved.count, moved.support_multiset()) != (base.count, base.support_multiset()):
            return SuiteResult("invariance", False, n, f"GL2 change altered the report for {arr.to_json()}")
        perm = list(range(m))
        rng.shuffle(perm)
        permuted = count_factors(permute(arr, perm))
        relabel = {}
        for (kind, idx), mult in base.support_multiset().items():
            key = (kind, None if idx is None else perm.index(idx - 1) + 1)
            relabel[key] = mult
        if permuted.count != base.count or permuted.support_multiset() != relabel:
            return SuiteResult("invariance", False, n, f"permutation {perm} altered the report for {arr.to_json()}")
    return SuiteResult("invariance", True, 2 * count)


def suite_structure(rng: random.Random) -> SuiteResult:
    for n in range(200):
        A, B, C = (smp.rand_op(rng, 3, 4) for _ in range(3))
        if weyl_mul(weyl_mul(A, B), C) != weyl_mul(A, weyl_mul(B, C)):
            return SuiteResult("structure", False, n, f"associativity fails for {A}; {B}; {C}")
    for n in range(100):
        m = rng.randint(1, 4)
        arr = smp.rand_normalized(rng, m).as_arrangement() if m >= 2 else Arrangement(((1, 0),), (smp.rand_scalar(rng),))
        e = TwistedElement(smp.rand_poly(rng, 3), [rng.randint(-2, 1) for _ in range(m)], arr)
        A, B = smp.rand_op(rng, 3, 3), smp.rand_op(rng, 3, 3)
        if apply_op(weyl_mul(A, B), e) != apply_op(A, apply_op(B, e)):
            return SuiteResult("structure", False, 200 + n, f"module action incompatible for A={A}, B={B}")
    for k in range(5):
        beta = smp.rand_noninteger(rng)
        coeffs = [(smp.rand_scalar(rng), s) for s in range(k)] + [(Scalar(k + 2), k)]
        got = euler_reduction_a1(coeffs, beta)
        expect = TwistedElement(Poly2.const(Scalar(k + 2) * factorial(k)), (k,), got.arr)
        if got != expect:
            return SuiteResult("structure", False, 300 + k, f"euler reduction k={k}: {got.render()}")
    return SuiteResult("structure", True, 305)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "annihilators": suite_annihilators,
    "division": suite_division,
    "lemma44": suite_lemma44,
    "lemma45": suite_lemma45,
    "lemma42": suite_lemma42,
    "counts": suite_counts,
    "invariance": suite_invariance,
    "structure": suite_structure,
}


def run_suites(seed: int, names=None, corrupt_q: bool = False) -> list[SuiteResult]:
    """Run suites in fixed order, each with its own RNG derived from ``seed``."""
    out = []
    for name, fn in SUITES.items():
        if names and name not in names:
            continue
        rng = random.Random(f"{seed}:{name}")
        out.append(fn(rng, corrupt_q=corrupt_q) if name == "annihilators" else fn(rng))
    return out
