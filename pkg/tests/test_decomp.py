import itertools
import random
from fractions import Fraction

import pytest

from dmod import sampling as smp
from dmod.arrangement import DuplicateLine, permute, transform
from dmod.decomp import (
    ORIGIN_COUNT_NOTE,
    CaseTag,
    ConeDescriptor,
    DecompositionReport,
    FactorSupport,
    count_factors,
    external_product_count,
    factor_supports,
    image_basis_descriptor,
    multiplicity_bound,
    normal_crossings_count,
    restricted_exponent,
)
from dmod.arrangement import Arrangement
from dmod.scalar import Scalar

H, T = Fraction(1, 2), Fraction(1, 3)


def gen(*beta):
    return smp.generic_arrangement([Scalar(b) if not isinstance(b, Scalar) else b for b in beta])


@pytest.mark.parametrize(
    "beta, count, tag",
    [
        ((0, 1, 2, -3, 7), 10, CaseTag.AllInteger),
        ((H, H, 1), 3, CaseTag.SumInteger),
        ((H, H, H), 1, CaseTag.SumNonInteger),
        ((T, T, T), 2, CaseTag.SumInteger),
        ((0,), 2, CaseTag.AllInteger),
    ],
)
def test_count_examples(beta, count, tag):
    rep = count_factors(gen(*beta))
    assert rep.count == count and rep.case_tag is tag


def test_report_json_shape():
    rep = count_factors(gen(H, H, 1))
    assert rep.to_json() == {
        "count": 3,
        "case": "SumInteger",
        "k": 1,
        "beta_H": "1",
        "factors": [{"kind": "Plane"}, {"kind": "Line", "index": 3}, {"kind": "Origin", "multiplicity": 1}],
        "notes": [ORIGIN_COUNT_NOTE],
    }


def test_all_integer_carries_nbc():
    rep = count_factors(gen(0, 0, 0))
    assert rep.nbc is not None and len(rep.nbc) == rep.count == 6
    assert "nbc" in rep.to_json()


@pytest.mark.parametrize(
    "tag, m, k, expected",
    [
        (CaseTag.AllInteger, 3, 3, {("Plane", None): 1, ("Line", 1): 1, ("Line", 2): 1, ("Line", 3): 1, ("Origin", None): 2}),
        (CaseTag.SumNonInteger, 4, 2, {("Plane", None): 1, ("Line", 1): 1, ("Line", 2): 1}),
        (CaseTag.SumInteger, 4, 1, {("Plane", None): 1, ("Line", 1): 1, ("Origin", None): 2}),
    ],
)
def test_factor_supports(tag, m, k, expected):
    fs = factor_supports(tag, m, k)
    got = {}
    for f in fs:
        got[(f.kind, f.index)] = got.get((f.kind, f.index), 0) + f.multiplicity
    assert got == expected


def test_factor_supports_rejects_impossible_case():
    with pytest.raises(ValueError):
        factor_supports(CaseTag.SumInteger, 4, 3)


def test_factor_support_invariants():
    with pytest.raises(ValueError):
        FactorSupport("Plane", multiplicity=2)
    with pytest.raises(ValueError):
        FactorSupport("Line")
    with pytest.raises(ValueError):
        DecompositionReport(3, (FactorSupport("Plane"),), CaseTag.SumNonInteger, 0, 3)


@pytest.mark.parametrize(
    "beta, expected",
    [((0, H, H), Scalar(1)), ((2, T), Scalar(T)), ((0, Scalar(H, 1), Scalar(H, -1)), Scalar(1))],
)
def test_restricted_exponent(beta, expected):
    assert restricted_exponent(gen(*beta)) == expected


def test_restricted_exponent_needs_noninteger():
    with pytest.raises(ValueError):
        restricted_exponent(gen(1, 2))


def test_small_counts():
    assert [normal_crossings_count(k, m, 2) for k, m in [(0, 1), (2, 2), (1, 2)]] == [1, 4, 2]
    with pytest.raises(ValueError):
        normal_crossings_count(0, 3, 2)
    assert external_product_count(2, 2) == 4 and external_product_count(1, 7) == 7
    assert multiplicity_bound(3, 2) == 16 and multiplicity_bound(0, 2) == 1 and multiplicity_bound(1, 1) == 2


def test_normal_crossings_cross_check_exhaustive():
    for m in (1, 2):
        for beta in itertools.product((0, H), repeat=m):
            rep = count_factors(gen(*beta))
            assert rep.count == normal_crossings_count(rep.k, m, 2)


def test_simplicity_characterization():
    grid = (0, H, T, Fraction(-5, 2), 1)
    for m in range(1, 6):
        for beta in itertools.combinations_with_replacement(grid, m):
            rep = count_factors(gen(*beta))
            s_int = sum(Fraction(b) for b in beta).denominator == 1
            simple = rep.k == 0 and (m <= 2 or not s_int)
            assert (rep.count == 1) is simple, beta


def test_invariance_under_gl2_and_permutation():
    rng = random.Random(2)
    for _ in range(15):
        m = rng.randint(1, 5)
        a = gen(*[rng.choice((0, H, T, 1)) for _ in range(m)])
        base = count_factors(a)
        moved = count_factors(transform(a, smp.rand_gl2(rng)))
        assert moved.count == base.count and moved.support_multiset() == base.support_multiset()
        perm = list(range(m))
        rng.shuffle(perm)
        p = count_factors(permute(a, perm))
        assert p.count == base.count
        # line indices follow the permutation: new position n holds old perm[n]
        relabel = {perm[n] + 1: n + 1 for n in range(m)}
        want = {(kind, None if idx is None else relabel[idx]): c for (kind, idx), c in base.support_multiset().items()}
        assert p.support_multiset() == want


def test_validation_propagates():
    with pytest.raises(DuplicateLine):
        count_factors(Arrangement(((1, 0), (2, 0)), (0, 0)))


class TestImageCones:
    def test_pair(self):
        c = image_basis_descriptor((1, 2), 3)
        assert c.constraints == ("<=-1", "<=-1") and c.contains(-1, -3) and not c.contains(0, -1)

    def test_singleton(self):
        c = image_basis_descriptor((2,), 3)
        assert c.constraints == (">=0", "<=-1") and c.contains(4, -1)

    def test_empty(self):
        assert image_basis_descriptor((), 3) == ConeDescriptor((), ("x", "y"), (">=0", ">=0"))

    def test_non_nbc_rejected(self):
        with pytest.raises(ValueError):
            image_basis_descriptor((2, 3), 3)


def test_render_mentions_note():
    text = count_factors(gen(H, H, 1)).render()
    assert text.startswith("c(M) = 3") and "note:" in text
