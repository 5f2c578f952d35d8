from __future__ import annotations

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

import reference_forms as ref
import shared
from wreathzeta import DirichletPoly, builtin, degree_pattern, wreath_zeta
from wreathzeta.dirichlet import RationalDirichletPoly
from wreathzeta.errors import NotTransitive
from wreathzeta.permgroup import Permutation, close_generators, wreath_product_group
from wreathzeta.wreath import (build_context, expand, functional_equation, prime_factors,
                               rescaled_assignments, specialize)


def test_s3_context():
    ctx = build_context(builtin("S3"))
    assert len(ctx.lattice) == 5
    stab = sorted(p.zeta.terms for p in ctx.stabilizer_patterns)
    assert stab == sorted([[(1, 1)], [(1, 2)], [(1, 2)], [(1, 2)], [(1, 2), (2, 1)]])
    assert ctx.indices == [6, 3, 3, 3, 1]


def test_a5_context_families():
    ctx = build_context(builtin("A5"))
    fam = {}
    for idx, pat in zip(ctx.indices, ctx.stabilizer_patterns):
        key = tuple(pat.zeta.terms)
        fam[key] = fam.get(key, 0) + 1
    assert fam == {((1, 1),): 1, ((1, 2),): 15, ((1, 3),): 10, ((1, 2), (2, 1)): 10,
                   ((1, 3), (3, 1)): 5, ((1, 1), (3, 2), (4, 1), (5, 1)): 1}


def test_c2_context():
    ctx = build_context(builtin("C2"))
    assert len(ctx.lattice) == 2 and ctx.indices == [2, 1]


def test_intransitive_rejected():
    G = close_generators([Permutation.from_cycles(3, (1, 2))])
    with pytest.raises(NotTransitive):
        build_context(G)


def test_small_known_values():
    assert wreath_zeta(DirichletPoly.constant(2), shared.context("S3")).as_dict() == \
        {1: 4, 2: 2, 3: 4}
    assert wreath_zeta(DirichletPoly.constant(2), build_context(builtin("C2"))).as_dict() == \
        {1: 4, 2: 1}


@pytest.mark.parametrize("name", ["C2", "S3", "S4", "A4", "A5", "D5", "PSL2_F5_on6",
                                  "PGL3_F2_on7"])
def test_trivial_h_gives_pattern_of_q(name):
    Q = builtin(name)
    assert wreath_zeta(DirichletPoly.constant(1), build_context(Q)) == degree_pattern(Q).zeta


H_NAMES = ("C2", "C3", "S3", "A4", "D4")
Q_NAMES = ("C2", "C3", "S3", "C4", "D4", "C5", "A4", "D5", "S4", "A5")


@given(st.sampled_from(H_NAMES), st.sampled_from(Q_NAMES))
@settings(max_examples=25, deadline=None)
def test_two_routes_agree(h, q):
    H, Q = builtin(h), builtin(q)
    if H.order ** Q.degree * Q.order > 10 ** 4:
        return
    formula = wreath_zeta(degree_pattern(H).zeta, build_context(Q))
    assert formula == degree_pattern(wreath_product_group(H, Q)).zeta


@given(st.sampled_from(H_NAMES + ("A5", "S5")), st.sampled_from(Q_NAMES + ("PGL3_F2_on7",)))
@settings(max_examples=25, deadline=None)
def test_special_value_transport(h, q):
    H, Q = builtin(h), builtin(q)
    z = wreath_zeta(degree_pattern(H).zeta, build_context(Q))
    assert sum(r * n * n for n, r in z.terms) == H.order ** Q.degree * Q.order


def test_nested_wreath_matches_oracle():
    # (C2 wr C2) wr C2 through the formula and directly
    ctx = build_context(builtin("C2"))
    z = wreath_zeta(wreath_zeta(DirichletPoly.constant(2), ctx), ctx)
    W = wreath_product_group(wreath_product_group(builtin("C2"), builtin("C2")), builtin("C2"))
    assert z == degree_pattern(W).zeta


def test_functional_equation_a5_leading_terms():
    fe = shared.fe("A5")
    assert fe.monomials[(1, 1, 1, 1, 1)].coeffs == {60: sp.Rational(1, 60)}
    x1x2x2 = fe.monomials[(1, 2, 2)].coeffs
    assert x1x2x2 == {30: 1, 60: sp.Rational(-1, 4)}
    assert fe.primes == [2, 3, 5]
    assert fe.y_exponents(60) == (2, 1, 1)


@pytest.mark.parametrize("name,builder", [
    ("A5", ref.alternating5_grouped), ("A5", ref.alternating5_by_partition),
    ("S3", ref.symmetric3_unsimplified), ("C6", lambda: ref.cyclic_general(6)),
    ("C8", lambda: ref.cyclic_general(8)), ("C9", lambda: ref.cyclic_general(9)),
])
def test_symbolic_forms(name, builder):
    got = ref.fe_expr(functional_equation(build_context(builtin(name))))
    assert sp.expand(got - builder()) == 0


def test_fe_degrees_factor_over_primes():
    for name in shared.CATALOG:
        fe = shared.fe(name)
        assert fe.primes == prime_factors(builtin(name).order)
        for _, c in fe.terms():
            for f in c.coeffs:
                fe.y_exponents(f)


def test_fe_json_and_render():
    fe = functional_equation(build_context(builtin("S3")))
    data = fe.to_json()
    assert data["monomials"][-1] == {"blocks": [1], "coeff": [[1, -1, 1]]}
    assert data["monomials"][0] == {"blocks": [1, 1, 1], "coeff": [[6, 1, 6]]}
    text = fe.render()
    assert "X1^3" in text and "(-1) * X1" in text


def test_specialize_residual_is_zero_for_wreath_output():
    ctx = build_context(builtin("A4"))
    fe = functional_equation(ctx)
    zh = degree_pattern(builtin("S3")).zeta
    assign = rescaled_assignments(zh, fe.d, None)
    out = wreath_zeta(zh, ctx)
    res = specialize(fe, assign)
    # expansion minus X1, so adding X1 back gives the wreath output
    assert res + RationalDirichletPoly.from_poly(zh) == RationalDirichletPoly.from_poly(out)
    assert expand(fe, assign) == out


def test_truncated_wreath_agrees_with_exact():
    ctx = shared.context("A5")
    zh = degree_pattern(builtin("PGL3_F2_on7")).zeta
    full = wreath_zeta(zh, ctx)
    for N in (1, 10, 1000, 10 ** 5):
        assert wreath_zeta(zh, ctx, N) == full.truncate(N)
