"""Numerics on the functional equation Psi of a limit zeta function.

At a fixed s the variables X_e (e >= 2) are replaced by truncated-series
values zeta(e s) and every f^{-s} by its numeric value, leaving a univariate
polynomial Phi(X) whose roots include zeta(s).  On top of that:

* real-root counting and bisection for the abscissa sigma0 (where a pair of
  real roots collides and leaves the real axis),
* the expansion  zeta(s) = a0 + a1 (s-sigma0)^{1/2} + a2 (s-sigma0) + ...,
* continuation of zeta(s) along s = n*eps by root tracking,
* a grid scan for zeros of the discriminant of Phi.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .dirichlet import DirichletPoly, evaluate
from .errors import (BadBracket, IllConditioned, MultiplicityDetectionFailed,
                     RootTrackingAmbiguity)
from .wreath import FunctionalEquation

TOL_IM = 1e-9
DEFAULT_BRACKET = (1.0, 2.0)
CLUSTER_TOL = 1e-4
DIRECT_RE = 2.0


@dataclass
class InstantiatedPoly:
    """Phi(X) = sum_i coefficients[i] X^i at a fixed s."""

    coefficients: np.ndarray
    s: complex

    @property
    def d(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return np.polyval(self.coefficients[::-1], x)

    def roots(self) -> np.ndarray:
        c = self.coefficients[::-1]
        if not np.all(np.isfinite(c)):
            raise IllConditioned(f"non-finite coefficients at s={self.s}")
        try:
            r = np.roots(c)
        except np.linalg.LinAlgError as exc:
            raise IllConditioned(str(exc)) from exc
        if len(r) != self.d:
            raise IllConditioned(f"leading coefficient vanished at s={self.s}")
        return r

    def scale(self) -> float:
        return float(np.abs(self.coefficients).max())

    def is_real(self) -> bool:
        return not np.iscomplexobj(self.coefficients)


def instantiate(fe: FunctionalEquation, Z: DirichletPoly, s: complex,
                values: dict[int, complex] | None = None) -> InstantiatedPoly:
    """Phi at s, with X_e <- values[e] if given, else <- Z(e s), for e >= 2."""
    real = isinstance(s, (int, float)) or (isinstance(s, complex) and s.imag == 0)
    sv = float(np.real(s)) if real else complex(s)
    xs: dict[int, complex] = {}
    coeffs = np.zeros(fe.d + 1, dtype=complex)
    for prof, c in fe.terms():
        term = c.evaluate(sv)
        for e in prof:
            if e == 1:
                continue
            if e not in xs:
                xs[e] = values[e] if values and e in values else evaluate(Z, e * sv)
            term *= xs[e]
        coeffs[prof.count(1)] += term
    if real and not values:
        coeffs = coeffs.real.copy()
    return InstantiatedPoly(coeffs, sv)


def count_real_roots(p: InstantiatedPoly, tol_im: float = TOL_IM) -> int:
    r = p.roots()
    return int(np.sum(np.abs(r.imag) < tol_im * (1 + np.abs(r))))


def real_roots(p: InstantiatedPoly, tol_im: float = TOL_IM) -> np.ndarray:
    r = p.roots()
    return np.sort(r.real[np.abs(r.imag) < tol_im * (1 + np.abs(r))])


@dataclass
class Sigma0Result:
    sigma0: float
    lower: float
    upper: float
    iterations: int
    counts: tuple[int, int]


def sigma0_search(fe: FunctionalEquation, Z: DirichletPoly,
                  bracket: tuple[float, float] = DEFAULT_BRACKET, tol: float = 1e-12,
                  tol_im: float = TOL_IM) -> Sigma0Result:
    """Bisection on the number of real roots of Phi.  tol=0 bisects to full precision."""
    lo, hi = map(float, bracket)
    c_lo = count_real_roots(instantiate(fe, Z, lo), tol_im)
    c_hi = count_real_roots(instantiate(fe, Z, hi), tol_im)
    if c_lo == c_hi:
        raise BadBracket(f"real-root counts agree ({c_lo}) at both ends of [{lo}, {hi}]")
    it = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        c = count_real_roots(instantiate(fe, Z, mid), tol_im)
        if c == c_lo:
            lo = mid
        else:
            hi = mid
        it += 1
    return Sigma0Result(0.5 * (lo + hi), lo, hi, it, (c_lo, c_hi))


def sigma0(fe: FunctionalEquation, Z: DirichletPoly,
           bracket: tuple[float, float] = DEFAULT_BRACKET, tol: float = 1e-12) -> float:
    return sigma0_search(fe, Z, bracket, tol).sigma0


# ---------------------------------------------------------------------------
# expansion at sigma0


@dataclass
class PuiseuxExpansion:
    sigma0: float
    e: int
    coefficients: np.ndarray
    ladder: np.ndarray = field(repr=False, default=None)
    misfit: float = 0.0

    def __call__(self, s: float) -> float:
        h = s - self.sigma0
        return float(sum(a * h ** (i / self.e) for i, a in enumerate(self.coefficients)))


def _track_real_root(fe, Z, s_path, start):
    """Follow the root nearest to the previous value along s_path; returns values."""
    z = start
    out = []
    for s in s_path:
        r = instantiate(fe, Z, float(s)).roots()
        z = r[np.argmin(np.abs(r - z))]
        out.append(z)
    return np.array(out)


def puiseux(fe: FunctionalEquation, Z: DirichletPoly, sigma0: float, depth: int = 3,
            ladder: np.ndarray | None = None) -> PuiseuxExpansion:
    """Coefficients a_0..a_depth of the expansion of zeta at sigma0 (from above).

    The zeta branch is identified by tracking the real root from sigma0 + 1,
    where direct series evaluation is accurate, down to sigma0.  With the
    colliding partner root r', (r + r')/2 is a power series in h = s - sigma0
    and (r - r')/(2 sqrt h) is another; both are fitted by least squares on a
    geometric ladder of h.
    """
    at = instantiate(fe, Z, sigma0).roots()
    dist = _gaps(at)
    sizes = (dist < CLUSTER_TOL).sum(axis=1) + 1
    if sizes.max() < 2:
        raise MultiplicityDetectionFailed(
            f"no root cluster at s={sigma0}; smallest root gap {dist.min():.3g}")
    e = int(sizes.max())
    if e != 2:
        warnings.warn(f"root cluster of size {e} at sigma0; fitting a square-root branch anyway")
    if ladder is None:
        ladder = np.logspace(-2, -8, 31)
    ladder = np.asarray(ladder, dtype=float)

    approach = sigma0 + np.logspace(0, math.log10(ladder[0]), 40)
    start = evaluate(Z, sigma0 + 1.0)
    z_prev = _track_real_root(fe, Z, approach, start)[-1]
    branch, partner = [], []
    for h in ladder:
        r = instantiate(fe, Z, sigma0 + h).roots()
        i = int(np.argmin(np.abs(r - z_prev)))
        z_prev = r[i]
        rest = np.delete(r, i)
        j = int(np.argmin(np.abs(rest - z_prev)))
        branch.append(r[i].real)
        partner.append(rest[j].real)
    branch, partner = np.array(branch), np.array(partner)

    n_even = depth // 2 + 1
    n_odd = (depth + 1) // 2
    extra = 2
    even = 0.5 * (branch + partner)
    odd = 0.5 * (branch - partner) / np.sqrt(ladder)
    V_even = np.vander(ladder, n_even + extra, increasing=True)
    V_odd = np.vander(ladder, max(n_odd, 1) + extra, increasing=True)
    ce = np.linalg.lstsq(V_even, even, rcond=None)[0]
    co = np.linalg.lstsq(V_odd, odd, rcond=None)[0]
    coeffs = np.empty(depth + 1)
    for i in range(depth + 1):
        coeffs[i] = ce[i // 2] if i % 2 == 0 else co[i // 2]
    exp = PuiseuxExpansion(float(sigma0), e, coeffs, ladder)
    exp.misfit = float(np.max(np.abs([exp(sigma0 + h) - b for h, b in zip(ladder, branch)])))
    return exp


# ---------------------------------------------------------------------------
# continuation


@dataclass
class Trajectory:
    step: complex
    points: list[tuple[int, complex]]

    def as_array(self) -> np.ndarray:
        return np.array([[n, z.real, z.imag] for n, z in self.points])


def continuation(fe: FunctionalEquation, Z: DirichletPoly, eps: complex, steps: int,
                 ambiguity: float = 1e-10, n_min: int = 1) -> Trajectory:
    """z_n ~ zeta(n eps) for n = steps, ..., n_min.

    Direct evaluation while Re(n eps) > 2; below that z_n is the root of Phi
    (with X_e <- z_{e n}) closest to z_{n+1}.
    """
    eps = complex(eps)
    if (steps * eps).real <= DIRECT_RE:
        raise ValueError("need Re(steps * eps) > 2 to start in the convergent regime")
    z: dict[int, complex] = {}

    def value(m):
        if m not in z:
            z[m] = evaluate(Z, m * eps)
        return z[m]

    points = []
    for n in range(steps, n_min - 1, -1):
        s = n * eps
        if s.real > DIRECT_RE:
            zn = value(n)
        else:
            vals = {e: value(e * n) for e in range(2, fe.d + 1)}
            r = instantiate(fe, Z, s, values=vals).roots()
            d = np.abs(r - z[n + 1])
            order = np.argsort(d)
            if len(r) > 1 and d[order[1]] - d[order[0]] < ambiguity:
                raise RootTrackingAmbiguity(f"two roots equidistant from z_{n + 1} at s={s}")
            zn = complex(r[order[0]])
            z[n] = zn
        points.append((n, zn))
    return Trajectory(eps, points)


# ---------------------------------------------------------------------------
# discriminant


def _sylvester(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Sylvester matrix of f, g given by descending coefficients."""
    m, n = len(f) - 1, len(g) - 1
    S = np.zeros((m + n, m + n), dtype=complex)
    for i in range(n):
        S[i, i:i + m + 1] = f
    for i in range(m):
        S[n + i, i:i + n + 1] = g
    return S


def discriminant(p: InstantiatedPoly) -> complex:
    """Discriminant of the monic normalization of Phi (via the resultant with Phi')."""
    c = np.asarray(p.coefficients, dtype=complex)[::-1]
    c = c / c[0]
    d = len(c) - 1
    res = np.linalg.det(_sylvester(c, np.polyder(c)))
    return complex((-1) ** (d * (d - 1) // 2) * res)


def _gaps(r: np.ndarray) -> np.ndarray:
    dist = np.abs(r[:, None] - r[None, :])
    np.fill_diagonal(dist, np.inf)
    return dist


def min_root_gap(p: InstantiatedPoly) -> float:
    return float(_gaps(p.roots()).min())


def _refine(fe, Z, s0: complex, h: float = 1e-4, iters: int = 60, tol: float = 1e-13):
    f = lambda s: discriminant(instantiate(fe, Z, complex(s)))
    a, b = complex(s0), complex(s0) + h
    fa, fb = f(a), f(b)
    for _ in range(iters):
        if fb == fa:
            break
        c = b - fb * (b - a) / (fb - fa)
        a, fa = b, fb
        b, fb = c, f(c)
        if abs(b - a) < tol:
            return b, True
    return b, abs(b - a) < 1e-9


def scan_singularities(fe: FunctionalEquation, Z: DirichletPoly,
                       region: tuple[float, float, float, float],
                       grid: int = 41, threshold: float = 1.0,
                       accept: float = 1e-3) -> list[complex]:
    """Candidate zeros of the discriminant of Phi in region = (re0, re1, im0, im1).

    Local minima of the smallest pairwise root distance on a grid that fall
    below ``threshold`` are refined by a secant iteration on the discriminant;
    a refined point is kept when two roots there are closer than ``accept``.
    """
    re0, re1, im0, im1 = region
    xs = np.linspace(re0, re1, grid)
    ys = np.linspace(im0, im1, grid)
    gap = np.empty((grid, grid))
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            gap[i, j] = min_root_gap(instantiate(fe, Z, complex(x, y) if y else float(x)))
    found: list[complex] = []
    dx = (re1 - re0) / max(grid - 1, 1)
    dy = (im1 - im0) / max(grid - 1, 1)
    pad = 2 * max(dx, dy)
    for i in range(grid):
        for j in range(grid):
            g = gap[i, j]
            if g >= threshold:
                continue
            nb = gap[max(i - 1, 0):i + 2, max(j - 1, 0):j + 2]
            if g > nb.min():
                continue
            s, ok = _refine(fe, Z, complex(xs[i], ys[j]), h=max(min(dx, dy) * 0.1, 1e-6))
            if not ok or min_root_gap(instantiate(fe, Z, s)) > accept:
                continue
            if not (re0 - pad <= s.real <= re1 + pad and im0 - pad <= s.imag <= im1 + pad):
                continue
            if all(abs(s - t) > 1e-7 for t in found):
                found.append(s)
    return sorted(found, key=lambda c: (round(c.real, 9), round(c.imag, 9)))
