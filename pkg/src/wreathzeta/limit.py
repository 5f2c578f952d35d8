"""Iterated wreath products W(Q, k) and their limit zeta function.

W(Q, 1) = Q and W(Q, k+1) = W(Q, k) wr_X Q.  For perfect Q the truncated
coefficients stabilize: starting from zeta = 1 (the trivial group) and
applying the wreath map, the coefficient of n^{-s} never changes after about
log_2(n) + 1 steps.  The fixed point truncated at N is computed by iterating
until two consecutive truncations agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .dirichlet import DirichletPoly
from .errors import InternalStabilizationFailure, NotPerfect
from .permgroup import PermGroup, is_perfect
from .wreath import (FunctionalEquation, WreathContext, build_context, functional_equation,
                     is_smooth, wreath_zeta)


@dataclass
class LimitZeta:
    coefficients: DirichletPoly
    iterations_used: int
    context: WreathContext = field(repr=False)
    stabilization: dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def N(self) -> int:
        return self.coefficients.truncation

    def max_stabilization_excess(self) -> float:
        """max over degrees n of  (first stable iterate) - (log_2 n + 1); should be <= 0."""
        worst = -math.inf
        for n, k in self.stabilization.items():
            worst = max(worst, k - (math.log2(n) + 1))
        return worst


def _context(Q: PermGroup | WreathContext) -> WreathContext:
    return Q if isinstance(Q, WreathContext) else build_context(Q)


def iteration_cap(N: int) -> int:
    return math.ceil(math.log2(max(N, 2))) + 4


def limit_zeta(Q: PermGroup | WreathContext, N: int, track: bool = True,
               fe: FunctionalEquation | None = None) -> LimitZeta:
    """Coefficients of the limit zeta function of the iterated wreath products of Q, up to N.

    ``stabilization[n]`` is the first iterate k (zeta_k = zeta(W(Q,k)) with
    zeta_0 = 1) from which the coefficient of n^{-s} no longer changes.
    """
    ctx = _context(Q)
    if not is_perfect(ctx.Q):
        raise NotPerfect(f"{ctx.Q!r} is not perfect; the limit does not exist")
    fe = fe or functional_equation(ctx)
    cap = iteration_cap(N)
    zeta = DirichletPoly.constant(1, N)
    changed_at: dict[int, int] = {1: 0}
    for k in range(1, cap + 1):
        new = wreath_zeta(zeta, ctx, N, fe=fe)
        if new == zeta:
            stab = {n: changed_at.get(n, 0) for n, _ in new.terms} if track else {}
            return LimitZeta(new, k, ctx, stab)
        if track:
            old = zeta.as_dict()
            for n, r in new.terms:
                if old.get(n) != r:
                    changed_at[n] = k
        zeta = new
    raise InternalStabilizationFailure(
        f"no fixed point after {cap} iterations at N={N}")


def finite_level_zeta(Q: PermGroup | WreathContext, k: int, N: int | None = None,
                      fe: FunctionalEquation | None = None) -> DirichletPoly:
    """zeta(W(Q, k), s); exact when N is None."""
    ctx = _context(Q)
    fe = fe or functional_equation(ctx)
    zeta = DirichletPoly.constant(1, N)
    for _ in range(k):
        zeta = wreath_zeta(zeta, ctx, N, fe=fe)
    return zeta


def level_sequence(Q: PermGroup | WreathContext, k: int, N: int | None = None) -> list[DirichletPoly]:
    """[zeta(W(Q,1)), ..., zeta(W(Q,k))]."""
    ctx = _context(Q)
    fe = functional_equation(ctx)
    out, zeta = [], DirichletPoly.constant(1, N)
    for _ in range(k):
        zeta = wreath_zeta(zeta, ctx, N, fe=fe)
        out.append(zeta)
    return out


def monotonicity_check(Q: PermGroup | WreathContext, k: int, N: int) -> bool:
    """r_n(W(Q, j)) <= r_n(W(Q, j+1)) for all n <= N and j < k."""
    levels = level_sequence(Q, k, N)
    for a, b in zip(levels, levels[1:]):
        bd = b.as_dict()
        if any(bd.get(n, 0) < r for n, r in a.terms):
            return False
    return True


def smoothness_check(zeta: DirichletPoly, primes) -> bool:
    return all(is_smooth(n, primes) for n, _ in zeta.terms)
