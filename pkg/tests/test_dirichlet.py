from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathzeta.dirichlet import (DirichletPoly, RationalDirichletPoly, add, evaluate, mul,
                                  power, rescale, weyl_zeta)
from wreathzeta.errors import MultiplicityOverflow, NonIntegralCoefficient

terms = st.dictionaries(st.integers(1, 400), st.integers(1, 50), max_size=12)
polys = terms.map(DirichletPoly.from_terms)
bounds = st.one_of(st.none(), st.integers(1, 5000))


def naive_mul(a, b, N=None):
    out = {}
    for n, r in a.terms:
        for m, t in b.terms:
            if N is None or n * m <= N:
                out[n * m] = out.get(n * m, 0) + r * t
    return out


@given(polys, polys, bounds)
def test_mul_matches_naive(a, b, N):
    assert mul(a, b, N).as_dict() == naive_mul(a, b, N)


@given(polys, polys, polys)
@settings(max_examples=50)
def test_ring_laws(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert mul(a, DirichletPoly.constant(1)) == a


@given(polys, polys, st.integers(1, 4))
@settings(max_examples=50)
def test_rescale_is_multiplicative(a, b, e):
    assert rescale(mul(a, b), e) == mul(rescale(a, e), rescale(b, e))


@given(polys, polys, st.integers(1, 3000))
def test_truncation_commutes_with_mul(a, b, N):
    assert mul(a, b, N) == mul(a, b).truncate(N)
    assert mul(a.truncate(N), b.truncate(N), N) == mul(a, b, N)


@given(polys, st.integers(0, 4), st.integers(1, 10 ** 6))
@settings(max_examples=40)
def test_power_matches_repeated_mul(a, k, N):
    acc = DirichletPoly.constant(1)
    for _ in range(k):
        acc = mul(acc, a, N)
    assert power(a, k, N) == acc


@given(polys, polys, st.floats(0.5, 3.0))
def test_evaluate_is_a_homomorphism(a, b, s):
    lhs = evaluate(mul(a, b), s)
    rhs = evaluate(a, s) * evaluate(b, s)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


@given(polys)
def test_csv_json_roundtrip(a):
    assert DirichletPoly.from_csv(a.to_csv()) == a
    b = DirichletPoly.from_json(a.to_json())
    assert b == a and b.truncation == a.truncation


def test_zero_terms_dropped_and_negative_rejected():
    assert len(DirichletPoly.from_terms({3: 0, 5: 2})) == 1
    with pytest.raises(ValueError):
        DirichletPoly.from_terms({2: -1})


def test_multiplicity_overflow():
    big = DirichletPoly.from_terms({1: 2 ** 40})
    with pytest.raises(MultiplicityOverflow):
        mul(big, big)


def test_huge_degrees_stay_exact():
    a = DirichletPoly.from_terms({1: 1, 10 ** 12: 3, 2 ** 61: 1})
    b = DirichletPoly.from_terms({1: 1, 10 ** 13: 2, 2 ** 62 + 1: 5})
    assert mul(a, b).as_dict() == naive_mul(a, b)
    N = 10 ** 25
    assert mul(a, b, N).as_dict() == naive_mul(a, b, N)


def test_large_multiplicities_promote_before_overflow():
    a = DirichletPoly.from_terms({1: 2 ** 31, 2: 2 ** 31})
    b = DirichletPoly.from_terms({1: 2 ** 31, 2: 2 ** 31})
    assert mul(a, b).as_dict() == {1: 2 ** 62, 2: 2 ** 63, 4: 2 ** 62}


def test_rescale_respects_truncation():
    a = DirichletPoly.from_terms({1: 1, 3: 2, 4: 1}, truncation=4)
    r = rescale(a, 2)
    assert r.as_dict() == {1: 1, 9: 2, 16: 1} and r.truncation == 16
    assert rescale(a, 3, 30).as_dict() == {1: 1, 27: 2}


def test_rational_poly():
    q = RationalDirichletPoly({1: Fraction(1, 2), 6: Fraction(-1, 3)})
    assert q.denominator() == 6
    assert q.min_degree() == 1
    assert (q + q.scaled(-1)).is_zero()
    with pytest.raises(NonIntegralCoefficient):
        q.to_poly()
    ind = RationalDirichletPoly.induced(5, DirichletPoly.from_terms({1: 3, 3: 1}))
    assert ind.coeffs == {5: Fraction(3, 5), 15: Fraction(1, 5)}
    assert json.dumps(ind.triples()) == "[[5, 3, 5], [15, 1, 5]]"


@given(st.sampled_from(["SU3", "Spin5", "G2"]), st.integers(1, 3000))
@settings(max_examples=20)
def test_weyl_series_against_double_loop(kind, N):
    dims = {
        "SU3": lambda m1, m2: Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2), 2),
        "Spin5": lambda m1, m2: Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (2 * m1 + m2 + 3), 6),
        "G2": lambda m1, m2: Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + 2 * m2 + 3)
                                      * (m1 + 3 * m2 + 4) * (2 * m1 + 3 * m2 + 5), 120),
    }
    _weyl_dim = lambda k, a, b: int(dims[k](a, b))  # noqa: E731
    acc = {}
    for m1 in range(N):
        if _weyl_dim(kind, m1, 0) > N:
            break
        for m2 in range(N):
            d = _weyl_dim(kind, m1, m2)
            if d > N:
                break
            acc[d] = acc.get(d, 0) + 1
    assert weyl_zeta(kind, N).as_dict() == acc


def test_small_weyl_dimensions():
    assert weyl_zeta("Spin5", 16).as_dict() == {1: 1, 4: 1, 5: 1, 10: 1, 14: 1, 16: 1}
    assert weyl_zeta("G2", 30).as_dict() == {1: 1, 7: 1, 14: 1, 27: 1}
