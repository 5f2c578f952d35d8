"""Irreducible character degrees of a finite permutation group.

Degrees come from central characters: every irreducible character chi gives
a common eigenvector (omega_k)_k of the class-multiplication matrices, with
omega_k = |C_k| chi(g_k) / chi(1), and then

    chi(1)^2 = |G| / sum_k |omega_k|^2 / |C_k|.

A random linear combination of the class matrices has simple spectrum with
probability one, so one eigendecomposition separates all characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dirichlet import DirichletPoly
from .errors import NumericalDegreeExtraction
from .permgroup import PermGroup, abelianization_order, class_data

INTEGRALITY_TOL = 1e-6
CLUSTER_TOL = 1e-8
MAX_RETRIES = 20
MAX_CLASSES = 2000


@dataclass(frozen=True)
class DegreePattern:
    zeta: DirichletPoly
    order: int
    class_count: int

    @property
    def degrees(self) -> list[int]:
        """All irreducible degrees with multiplicity, ascending."""
        return [n for n, r in self.zeta.terms for _ in range(r)]


def class_matrices(G: PermGroup) -> np.ndarray:
    """``A[i, j, k]`` = number of x in C_i with x^{-1} z_k in C_j (z_k a fixed element of C_k)."""
    cd = class_data(G)
    r = cd.sizes.size
    A = np.zeros((r, r, r), dtype=np.int64)
    lx = cd.labels
    inv = G.inverse_rows
    for k, zi in enumerate(cd.representatives):
        z = G.elements[zi]
        ly = cd.labels[G.index_of(inv[:, z])]
        A[:, :, k] = np.bincount(lx * r + ly, minlength=r * r).reshape(r, r)
    return A


def _degrees_from_combination(A: np.ndarray, sizes: np.ndarray, order: int,
                              rng: np.random.Generator) -> list[int] | None:
    r = sizes.size
    alpha = rng.standard_normal(r)
    M = np.tensordot(alpha, A.astype(float), axes=1)
    vals, vecs = np.linalg.eig(M)
    scale = max(1.0, float(np.abs(vals).max()))
    gaps = np.abs(vals[:, None] - vals[None, :]) + np.eye(r) * scale
    if gaps.min() < CLUSTER_TOL * scale:
        return None
    degrees = []
    for col in range(r):
        v = vecs[:, col]
        if abs(v[0]) < 1e-12:
            return None
        omega = v / v[0]
        d = math.sqrt(order / float(np.sum(np.abs(omega) ** 2 / sizes)))
        if abs(d - round(d)) > INTEGRALITY_TOL:
            return None
        degrees.append(int(round(d)))
    if sum(d * d for d in degrees) != order:
        return None
    return sorted(degrees)


def degree_pattern(G: PermGroup, seed: int = 0) -> DegreePattern:
    cached = G.__dict__.get("_degree_pattern")
    if cached is not None:
        return cached
    cd = class_data(G)
    r = int(cd.sizes.size)
    if r > MAX_CLASSES:
        raise NumericalDegreeExtraction(f"{r} classes exceeds the matrix-size bound {MAX_CLASSES}")
    if r == 1:
        degrees = [1]
    else:
        A = class_matrices(G)
        rng = np.random.default_rng(seed)
        for _ in range(MAX_RETRIES):
            degrees = _degrees_from_combination(A, cd.sizes.astype(float), G.order, rng)
            if degrees is not None:
                break
        else:
            raise NumericalDegreeExtraction(
                f"no clean degree extraction after {MAX_RETRIES} random combinations")
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    pattern = DegreePattern(DirichletPoly.from_terms(counts), G.order, r)
    G.__dict__["_degree_pattern"] = pattern
    return pattern


def special_values(D: DegreePattern) -> tuple[int, int, int]:
    """(zeta(0), zeta(-2), r_1): class number, group order, abelianization order."""
    terms = D.zeta.terms
    return (sum(r for _, r in terms), sum(r * n * n for n, r in terms), D.zeta.coefficient(1))


def involution_count(G: PermGroup) -> int:
    """Number of g with g^2 = 1 (identity included)."""
    E = G.elements
    sq = np.take_along_axis(E, E, axis=1)
    return int(np.all(sq == np.arange(G.degree)[None, :], axis=1).sum())


def involution_count_check(G: PermGroup, D: DegreePattern) -> bool | None:
    """zeta(G, -1) == #{g : g^2 = 1}; None (not applicable) for nontrivial odd order.

    The identity only holds when every irreducible is realizable over the reals,
    so a False result is meaningful only for such groups.
    """
    if G.order > 1 and G.order % 2 == 1:
        return None
    zeta_minus_one = sum(r * n for n, r in D.zeta.terms)
    return zeta_minus_one == involution_count(G)


def check_pattern(G: PermGroup, D: DegreePattern) -> None:
    """Raise unless the class number, order and abelianization all agree with D."""
    zeta0, zeta_m2, r1 = special_values(D)
    if zeta0 != class_data(G).sizes.size:
        raise NumericalDegreeExtraction("zeta(0) differs from the class number")
    if zeta_m2 != G.order:
        raise NumericalDegreeExtraction("zeta(-2) differs from the group order")
    if r1 != abelianization_order(G):
        raise NumericalDegreeExtraction("r_1 differs from the abelianization order")
