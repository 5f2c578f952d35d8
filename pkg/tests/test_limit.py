from __future__ import annotations

import math

import pytest

import shared
from wreathzeta import DirichletPoly, builtin, degree_pattern, finite_level_zeta, limit_zeta
from wreathzeta.errors import NotPerfect
from wreathzeta.limit import iteration_cap, level_sequence, monotonicity_check, smoothness_check

A5_FIRST_TERMS = [(1, 1), (3, 2), (4, 1), (5, 1), (15, 6), (20, 3), (25, 3), (45, 2), (60, 1),
                  (75, 19), (90, 4), (100, 9)]


def test_levels_zero_and_one():
    assert finite_level_zeta(builtin("A5"), 0) == DirichletPoly.constant(1)
    assert finite_level_zeta(builtin("S4"), 1) == degree_pattern(builtin("S4")).zeta


def test_c2_level_orders():
    for k, z in enumerate(level_sequence(builtin("C2"), 6), start=1):
        assert sum(r * n * n for n, r in z.terms) == 2 ** (2 ** k - 1)


@pytest.mark.parametrize("name,k", [("S3", 3), ("A5", 2), ("C3", 4), ("A4", 2)])
def test_level_order_formula(name, k):
    Q = builtin(name)
    z = finite_level_zeta(Q, k)
    d = Q.degree
    assert sum(r * n * n for n, r in z.terms) == Q.order ** ((d ** k - 1) // (d - 1))


def test_c3_max_degree():
    levels = level_sequence(builtin("C3"), 4)
    assert [z.max_degree() for z in levels[1:]] == [3, 3 ** 4, 3 ** 13]


def test_c2_max_degree_exponents():
    levels = level_sequence(builtin("C2"), 5)
    exps = [round(math.log2(z.max_degree())) for z in levels]
    assert exps == [0, 1, 2, 5, 11]
    for k in range(3, 6):
        assert exps[k - 1] == 2 ** (k - 2) + 2 ** (k - 3) - 1


def test_a5_first_terms():
    L = limit_zeta(builtin("A5"), 100)
    assert L.coefficients.terms == A5_FIRST_TERMS
    assert L.coefficients.coefficient(1) == 1


def test_not_perfect():
    for name in ("C2", "S3", "S4"):
        with pytest.raises(NotPerfect):
            limit_zeta(builtin(name), 100)


def test_iteration_bound():
    for name in shared.CATALOG:
        for N in (10, 10 ** 4, 10 ** 12):
            L = shared.limit(name, N)
            assert L.iterations_used <= iteration_cap(N)


@pytest.mark.parametrize("name", shared.CATALOG)
def test_stabilization_index(name):
    L = shared.limit(name, 10 ** 6, True)
    for n, k in L.stabilization.items():
        assert k <= math.log2(n) + 1, (n, k)


def test_prefix_of_level_two_matches_limit():
    two = finite_level_zeta(builtin("A5"), 2, 3)
    assert two == shared.limit("A5", 3).coefficients


def test_truncations_are_consistent():
    big = shared.limit("A5", 10 ** 8).coefficients
    for N in (10, 10 ** 3, 10 ** 6):
        assert shared.limit("A5", N).coefficients == big.truncate(N)


def test_smoothness_and_monotonicity():
    for name in shared.CATALOG:
        ctx = shared.context(name)
        assert smoothness_check(shared.limit(name, 10 ** 8).coefficients, ctx.primes)
    assert monotonicity_check(builtin("A5"), 1, 100)
    assert monotonicity_check(builtin("S3"), 2, 100)
    assert monotonicity_check(builtin("A5"), 0, 100)
