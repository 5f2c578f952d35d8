"""Representation zeta functions of permutational wreath products H wr_X Q.

The zeta function of H wr_X Q is computed grouped by the outer partition P':

    sum_{P'} zeta_H(|P'_1| s) ... zeta_H(|P'_l| s)
             * sum_{P <= P'} mu(P, P') [Q:Q_P]^{-1-s} zeta_{Q_P}(s)

so each inner sum is a fixed rational Dirichlet polynomial attached to P', and
only the products of rescaled zeta_H need recomputing for a new H.  Collecting
the P' with the same multiset of block sizes gives the polynomial Psi in
X_e = zeta_H(e s) used as the functional equation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import dirichlet as dp
from .chardeg import DegreePattern, degree_pattern
from .dirichlet import DirichletPoly, RationalDirichletPoly
from .errors import NonIntegralCoefficient, NotTransitive
from .permgroup import PartitionLattice, PermGroup, enumerate_lattice, is_transitive

Profile = tuple[int, ...]


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_smooth(n: int, primes) -> bool:
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1


@dataclass
class WreathContext:
    Q: PermGroup
    lattice: PartitionLattice
    stabilizer_patterns: list[DegreePattern]
    block_profiles: list[Profile]
    indices: list[int]
    inner: list[RationalDirichletPoly] = field(repr=False)

    @property
    def d(self) -> int:
        return self.Q.degree

    @property
    def primes(self) -> list[int]:
        return prime_factors(self.Q.order)


def build_context(Q: PermGroup, seed: int = 0) -> WreathContext:
    if Q.degree < 2 or not is_transitive(Q):
        raise NotTransitive(f"{Q!r} must act transitively on at least 2 points")
    L = enumerate_lattice(Q)
    patterns = [degree_pattern(S, seed=seed) for S in L.stabilizers]
    indices = [L.index(i) for i in range(len(L))]
    profiles = [P.block_sizes for P in L.partitions]
    primes = prime_factors(Q.order)
    for idx, pat in zip(indices, patterns):
        assert Q.order % idx == 0
        assert all(is_smooth(n, primes) for n, _ in pat.zeta.terms)
    induced = [RationalDirichletPoly.induced(idx, pat.zeta) for idx, pat in zip(indices, patterns)]
    inner = []
    for j in range(len(L)):
        acc = RationalDirichletPoly()
        for i in np.flatnonzero(L.leq[:, j]):
            mu = int(L.mobius[i, j])
            if mu:
                acc = acc + induced[i].scaled(mu)
        inner.append(acc)
    return WreathContext(Q, L, patterns, profiles, indices, inner)


# ---------------------------------------------------------------------------


@dataclass
class FunctionalEquation:
    """Psi = sum_profiles coeff(s) * prod_e X_e^{m_e}  -  X_1.

    ``monomials`` maps a sorted tuple of block sizes (summing to d) to its
    coefficient; the trailing ``- X_1`` is implicit.
    """

    d: int
    primes: list[int]
    monomials: dict[Profile, RationalDirichletPoly]

    def terms(self) -> list[tuple[Profile, RationalDirichletPoly]]:
        """All monomials of Psi, the ``-X_1`` term last."""
        return list(self.monomials.items()) + [((1,), RationalDirichletPoly({1: -1}))]

    def y_exponents(self, f: int) -> tuple[int, ...]:
        """f^{-s} as a monomial prod_j Y_j^{a_j} with Y_j = p_j^{-s}."""
        exps = []
        for p in self.primes:
            a = 0
            while f % p == 0:
                f //= p
                a += 1
            exps.append(a)
        if f != 1:
            raise ValueError("degree is not smooth over the primes of |Q|")
        return tuple(exps)

    def x1_polynomial(self) -> dict[int, list[tuple[Profile, RationalDirichletPoly]]]:
        """Group monomials by their power of X_1 (``-X_1`` included)."""
        out: dict[int, list] = {}
        for prof, coeff in self.terms():
            out.setdefault(prof.count(1), []).append((tuple(e for e in prof if e != 1), coeff))
        return out

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "primes": self.primes,
            "monomials": [{"blocks": list(prof), "coeff": coeff.triples()}
                          for prof, coeff in self.terms()],
        }

    def render(self) -> str:
        lines = []
        for prof, coeff in self.terms():
            mono = " ".join(f"X{e}^{m}" if m > 1 else f"X{e}"
                            for e, m in sorted(Counter(prof).items()))
            parts = []
            for f, q in coeff.coeffs.items():
                parts.append(str(q) if f == 1 else f"{q}*{f}^-s")
            lines.append(f"  + ({' + '.join(parts)}) * {mono}")
        return "Psi =\n" + "\n".join(lines)


def functional_equation(ctx: WreathContext) -> FunctionalEquation:
    monos: dict[Profile, RationalDirichletPoly] = {}
    for prof, inner in zip(ctx.block_profiles, ctx.inner):
        monos[prof] = monos.get(prof, RationalDirichletPoly()) + inner
    monos = {p: c for p, c in sorted(monos.items(), key=lambda kv: (-len(kv[0]), kv[0]))
             if not c.is_zero()}
    return FunctionalEquation(ctx.d, ctx.primes, monos)


# ---------------------------------------------------------------------------
# expansion kernel


def _mul_arrays(a, b, bound):
    return dp._aggregate(*dp._convolve(a[0], a[1], b[0], b[1], bound))


def _bound_div(N, f):
    return None if N is None else N // f


def _expand(monomials: dict[Profile, RationalDirichletPoly],
            assignments: dict[int, DirichletPoly], N: int | None):
    """Integer arrays for  L * sum coeff * prod X_e  truncated at N, and the scale L."""
    scale = math.lcm(1, *(c.denominator() for c in monomials.values()))
    plans = []
    need: dict[tuple[int, int], int | None] = {}
    for prof, coeff in monomials.items():
        bound = _bound_div(N, coeff.min_degree())
        counts = Counter(prof)
        plans.append((coeff, counts, bound))
        for e, m in counts.items():
            for k in range(1, m + 1):
                old = need.get((e, k), 0)
                need[(e, k)] = None if (old is None or bound is None) else max(old, bound)
    powers: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}
    for (e, k) in sorted(need):
        base = assignments[e]
        if k == 1:
            arr = (base.degrees, base.mults)
            b = need[(e, 1)]
            if b is not None and len(base) and base.max_degree() > b:
                t = base.truncate(b)
                arr = (t.degrees, t.mults)
            powers[(e, 1)] = arr
        else:
            powers[(e, k)] = _mul_arrays(powers[(e, k - 1)], powers[(e, 1)], need[(e, k)])
    deg_parts, mult_parts = [], []
    for coeff, counts, bound in plans:
        acc = coeff.integer_arrays(scale)
        factors = sorted((powers[(e, m)] for e, m in counts.items()), key=lambda a: a[0].size)
        for fac in factors:
            acc = _mul_arrays(acc, fac, N)
        deg_parts.append(acc[0])
        mult_parts.append(acc[1])
    if any(p.dtype == object for p in deg_parts):
        deg_parts = [dp._to_object(p) for p in deg_parts]
    if any(p.dtype == object for p in mult_parts) or \
            sum(dp._maxabs(p) for p in mult_parts) >= dp._SAFE:
        mult_parts = [dp._to_object(p) for p in mult_parts]
    deg, mult = dp._aggregate(np.concatenate(deg_parts), np.concatenate(mult_parts))
    return deg, mult, scale


def _descale(deg, mult, scale):
    if scale == 1:
        return deg, mult
    if mult.dtype == object:
        bad = any(m % scale for m in mult.tolist())
    else:
        bad = bool(np.any(mult % scale))
    if bad:
        raise NonIntegralCoefficient("combined coefficients are not integral")
    return deg, mult // scale


def _assignment_bound(assignments, N):
    bounds = [N] + [a.truncation for a in assignments.values()]
    return dp._min_bound(*bounds)


def expand(fe: FunctionalEquation, assignments: dict[int, DirichletPoly],
           N: int | None = None) -> DirichletPoly:
    """The wreath expansion part of Psi (no ``-X_1``) at X_e <- assignments[e]."""
    bound = dp._min_bound(N, assignments[1].truncation) if 1 in assignments else N
    deg, mult, scale = _expand(fe.monomials, assignments, bound)
    deg, mult = _descale(deg, mult, scale)
    if mult.size and (min(mult.tolist()) if mult.dtype == object else int(mult.min())) < 0:
        raise NonIntegralCoefficient("expansion produced negative multiplicities")
    return DirichletPoly._checked(deg, mult, bound)


def specialize(fe: FunctionalEquation, assignments: dict[int, DirichletPoly],
               N: int | None = None) -> RationalDirichletPoly:
    """Psi evaluated at X_e <- assignments[e], truncated at N.

    The result is a signed series; it vanishes identically when the
    assignments are the rescalings of a fixed point of the wreath map.
    """
    bound = _assignment_bound(assignments, N)
    deg, mult, scale = _expand(fe.monomials, assignments, bound)
    deg, mult = _descale(deg, mult, scale)
    out = {int(n): int(r) for n, r in zip(deg.tolist(), mult.tolist())}
    for n, r in assignments[1].terms:
        if bound is None or n <= bound:
            out[n] = out.get(n, 0) - r
    return RationalDirichletPoly(out)


def rescaled_assignments(zeta: DirichletPoly, d: int, N: int | None) -> dict[int, DirichletPoly]:
    return {e: dp.rescale(zeta, e, N) for e in range(1, d + 1)}


def wreath_zeta(zetaH: DirichletPoly, ctx: WreathContext, N: int | None = None,
                fe: FunctionalEquation | None = None) -> DirichletPoly:
    """zeta(H wr_X Q, s) truncated at N (exact when N is None and zetaH is complete)."""
    fe = fe or functional_equation(ctx)
    bound = dp._min_bound(N, zetaH.truncation)
    return expand(fe, rescaled_assignments(zetaH, ctx.d, bound), bound)
