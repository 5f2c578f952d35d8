"""Exact sparse Dirichlet polynomials  sum_n r_n n^{-s}.

Terms live in two parallel numpy arrays (degrees ascending, multiplicities).
Arrays are ``int64`` while values are comfortably inside the machine range and
fall back to ``object`` (Python ints) otherwise, so arithmetic is always exact.
"""

from __future__ import annotations

import cmath
import json
import math
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .errors import MultiplicityOverflow, NonIntegralCoefficient

MULT_MAX = 2**64 - 1
DEGREE_MAX = 2**128 - 1
_SAFE = 2**62


def _as_array(values: Iterable[int]) -> np.ndarray:
    values = [int(v) for v in values]
    if values and max(abs(v) for v in values) >= _SAFE:
        return np.array(values, dtype=object)
    return np.array(values, dtype=np.int64)


def _to_object(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        return arr
    return np.array([int(x) for x in arr.tolist()], dtype=object)


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max(abs(x) for x in arr.tolist())
    return int(np.abs(arr).max())


def _shrink(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object and (arr.size == 0 or _maxabs(arr) < _SAFE):
        return np.array([int(x) for x in arr.tolist()], dtype=np.int64)
    return arr


def _aggregate(deg: np.ndarray, mult: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sum multiplicities of equal degrees; drop zero sums."""
    if deg.size == 0:
        return deg, mult
    order = np.argsort(deg, kind="stable")
    deg = deg[order]
    mult = mult[order]
    if deg.dtype == object:
        change = np.array([a != b for a, b in zip(deg[1:].tolist(), deg[:-1].tolist())], dtype=bool)
    else:
        change = deg[1:] != deg[:-1]
    starts = np.concatenate(([0], np.flatnonzero(change) + 1))
    udeg = deg[starts]
    sums = np.add.reduceat(mult, starts)
    keep = sums != 0
    return udeg[keep], sums[keep]


def _convolve(ad, am, bd, bm, bound: int | None):
    """Products a_i * b_j with degree <= bound (all pairs if bound is None)."""
    if ad.size == 0 or bd.size == 0:
        return ad[:0], am[:0]
    if ad.size > bd.size:
        ad, am, bd, bm = bd, bm, ad, am
    if bound is None:
        counts = np.full(ad.size, bd.size, dtype=np.int64)
    else:
        if ad.dtype == object or bd.dtype == object or bound >= _SAFE:
            limits = np.array([bound // int(x) for x in ad.tolist()], dtype=object)
            counts = np.array([np.searchsorted(bd, lim, side="right") if lim < _SAFE or bd.dtype == object
                               else bd.size for lim in limits.tolist()], dtype=np.int64)
        else:
            limits = bound // ad
            counts = np.searchsorted(bd, limits, side="right")
    total = int(counts.sum())
    if total == 0:
        return ad[:0], am[:0]
    rep = np.repeat(np.arange(ad.size), counts)
    starts = np.cumsum(counts) - counts
    bidx = np.arange(total) - np.repeat(starts, counts)
    need_obj_deg = ad.dtype == object or bd.dtype == object or (
        (bound is None or bound >= _SAFE) and _maxabs(ad) * _maxabs(bd) >= _SAFE)
    if need_obj_deg:
        ad, bd = _to_object(ad), _to_object(bd)
    if am.dtype == object or bm.dtype == object or \
            _maxabs(am) * _maxabs(bm) * min(ad.size, bd.size) >= _SAFE:
        am, bm = _to_object(am), _to_object(bm)
    return ad[rep] * bd[bidx], am[rep] * bm[bidx]


def _min_bound(*bounds):
    present = [b for b in bounds if b is not None]
    return min(present) if present else None


class DirichletPoly:
    """A finite Dirichlet polynomial with nonnegative integer multiplicities.

    ``truncation`` (when set) is the bound N up to which the terms are known
    exactly; no stored degree exceeds it.  Equality compares terms only.
    """

    __slots__ = ("degrees", "mults", "truncation")

    def __init__(self, degrees: np.ndarray, mults: np.ndarray, truncation: int | None = None):
        self.degrees = degrees
        self.mults = mults
        self.truncation = None if truncation is None else int(truncation)
        for arr in (degrees, mults):
            arr.setflags(write=False)

    # -- construction ------------------------------------------------------
    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]],
                   truncation: int | None = None) -> DirichletPoly:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for n, r in items:
            n, r = int(n), int(r)
            if n < 1:
                raise ValueError(f"degree must be >= 1, got {n}")
            acc[n] = acc.get(n, 0) + r
        if truncation is not None:
            acc = {n: r for n, r in acc.items() if n <= truncation}
        return cls._checked(sorted(acc), [acc[n] for n in sorted(acc)], truncation)

    @classmethod
    def _checked(cls, degrees, mults, truncation=None) -> DirichletPoly:
        d = _as_array(degrees) if not isinstance(degrees, np.ndarray) else degrees
        m = _as_array(mults) if not isinstance(mults, np.ndarray) else mults
        keep = m != 0
        d, m = _shrink(d[keep]), _shrink(m[keep])
        if m.size:
            lo = min(m.tolist()) if m.dtype == object else int(m.min())
            if lo < 0:
                raise ValueError("multiplicities must be nonnegative")
            if _maxabs(m) > MULT_MAX:
                raise MultiplicityOverflow("multiplicity exceeds the 64-bit range")
        if d.size and (d.dtype == object and max(d.tolist()) > DEGREE_MAX):
            raise MultiplicityOverflow("degree exceeds the 128-bit range")
        return cls(d, m, truncation)

    @classmethod
    def constant(cls, c: int = 1, truncation: int | None = None) -> DirichletPoly:
        return cls.from_terms({1: c} if c else {}, truncation)

    # -- access ------------------------------------------------------------
    @property
    def terms(self) -> list[tuple[int, int]]:
        return list(zip((int(x) for x in self.degrees.tolist()),
                        (int(x) for x in self.mults.tolist())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def coefficient(self, n: int) -> int:
        i = int(np.searchsorted(self.degrees, n))
        if i < self.degrees.size and int(self.degrees[i]) == n:
            return int(self.mults[i])
        return 0

    def __len__(self) -> int:
        return int(self.degrees.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms))

    def __repr__(self) -> str:
        shown = " + ".join(str(r) if n == 1 else f"{r}*{n}^-s" for n, r in self.terms[:8])
        more = " + ..." if len(self) > 8 else ""
        trunc = "" if self.truncation is None else f", N={self.truncation}"
        return f"DirichletPoly({shown or '0'}{more}{trunc})"

    def max_degree(self) -> int:
        return int(self.degrees[-1]) if len(self) else 0

    def total(self) -> int:
        """Sum of the multiplicities, i.e. the value at s = 0."""
        return sum(int(x) for x in self.mults.tolist())

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: DirichletPoly) -> DirichletPoly:
        return add(self, other)

    def truncate(self, N: int) -> DirichletPoly:
        keep = self.degrees <= N if self.degrees.dtype != object else \
            np.array([d <= N for d in self.degrees.tolist()], dtype=bool)
        return DirichletPoly(_shrink(self.degrees[keep]), self.mults[keep],
                             _min_bound(N, self.truncation))

    def evaluate(self, s: complex) -> complex:
        return evaluate(self, s)

    # -- serialization -------------------------------------------------------
    def to_csv(self) -> str:
        return "".join(f"{n},{r}\n" for n, r in self.terms)

    def to_json(self) -> str:
        return json.dumps({"terms": [[n, r] for n, r in self.terms], "truncation": self.truncation})

    @classmethod
    def from_csv(cls, text: str, truncation: int | None = None) -> DirichletPoly:
        pairs = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("degree"):
                continue
            n, r = line.split(",")[:2]
            pairs.append((int(n), int(r)))
        return cls.from_terms(pairs, truncation)

    @classmethod
    def from_json(cls, text: str) -> DirichletPoly:
        data = json.loads(text)
        return cls.from_terms([tuple(t) for t in data["terms"]], data.get("truncation"))


def add(a: DirichletPoly, b: DirichletPoly) -> DirichletPoly:
    deg = np.concatenate([_to_object(a.degrees), _to_object(b.degrees)]) \
        if a.degrees.dtype != b.degrees.dtype else np.concatenate([a.degrees, b.degrees])
    mult = np.concatenate([_to_object(a.mults), _to_object(b.mults)]) \
        if a.mults.dtype != b.mults.dtype else np.concatenate([a.mults, b.mults])
    if mult.dtype != object and _maxabs(mult) >= _SAFE // 2:
        mult = _to_object(mult)
    d, m = _aggregate(deg, mult)
    bound = _min_bound(a.truncation, b.truncation)
    out = DirichletPoly._checked(d, m, bound)
    return out.truncate(bound) if bound is not None else out


def mul(a: DirichletPoly, b: DirichletPoly, N: int | None = None) -> DirichletPoly:
    """Product truncated at N; also bounded by the operands' own truncations."""
    bound = _min_bound(N, a.truncation, b.truncation)
    d, m = _aggregate(*_convolve(a.degrees, a.mults, b.degrees, b.mults, bound))
    return DirichletPoly._checked(d, m, bound)


def rescale(a: DirichletPoly, e: int, N: int | None = None) -> DirichletPoly:
    """Substitute s -> e*s, i.e. send degree n to n**e."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    bound = N
    if a.truncation is not None:
        bound = _min_bound(N, a.truncation ** e)
    degs, mults = [], []
    for n, r in a.terms:
        ne = n ** e
        if bound is not None and ne > bound:
            break
        degs.append(ne)
        mults.append(r)
    return DirichletPoly._checked(degs, mults, bound)


def power(a: DirichletPoly, k: int, N: int | None = None) -> DirichletPoly:
    out = DirichletPoly.constant(1, N)
    base = a
    while k:
        if k & 1:
            out = mul(out, base, N)
        k >>= 1
        if k:
            base = mul(base, base, N)
    return out


def _logs(degrees: np.ndarray) -> np.ndarray:
    if degrees.dtype == object:
        return np.array([math.log(d) for d in degrees.tolist()], dtype=float)
    return np.log(degrees.astype(float))


def evaluate(a: DirichletPoly, s: complex) -> complex:
    """Double-precision value of the polynomial at s (terms summed by ascending degree)."""
    if not len(a):
        return 0j
    terms = a.mults.astype(float) * np.exp(-complex(s) * _logs(a.degrees))
    return complex(np.sum(terms))


def evaluate_many(a: DirichletPoly, s_values: Iterable[complex]) -> np.ndarray:
    s_arr = np.asarray(list(s_values), dtype=complex)
    if not len(a):
        return np.zeros(s_arr.shape, dtype=complex)
    logs = _logs(a.degrees)
    w = a.mults.astype(float)
    return np.exp(-s_arr[:, None] * logs[None, :]) @ w


# ---------------------------------------------------------------------------


class RationalDirichletPoly:
    """A finite sum  sum_f q_f f^{-s}  with exact rational (possibly negative) q_f."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] | None = None):
        clean = {}
        for f, q in (coeffs or {}).items():
            q = Fraction(q)
            if q:
                if int(f) < 1:
                    raise ValueError("degree must be >= 1")
                clean[int(f)] = q
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def induced(cls, index: int, pattern: DirichletPoly) -> RationalDirichletPoly:
        """index^{-1-s} * pattern(s)."""
        return cls({index * n: Fraction(r, index) for n, r in pattern.terms})

    @classmethod
    def from_poly(cls, a: DirichletPoly) -> RationalDirichletPoly:
        return cls(dict(a.terms))

    def __add__(self, other: RationalDirichletPoly) -> RationalDirichletPoly:
        out = dict(self.coeffs)
        for f, q in other.coeffs.items():
            out[f] = out.get(f, 0) + q
        return RationalDirichletPoly(out)

    def __neg__(self) -> RationalDirichletPoly:
        return RationalDirichletPoly({f: -q for f, q in self.coeffs.items()})

    def __sub__(self, other: RationalDirichletPoly) -> RationalDirichletPoly:
        return self + (-other)

    def scaled(self, c) -> RationalDirichletPoly:
        c = Fraction(c)
        return RationalDirichletPoly({f: c * q for f, q in self.coeffs.items()})

    def __mul__(self, other) -> RationalDirichletPoly:
        if isinstance(other, DirichletPoly):
            other = RationalDirichletPoly.from_poly(other)
        if not isinstance(other, RationalDirichletPoly):
            return self.scaled(other)
        out: dict[int, Fraction] = {}
        for f, q in self.coeffs.items():
            for g, p in other.coeffs.items():
                out[f * g] = out.get(f * g, 0) + q * p
        return RationalDirichletPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, DirichletPoly):
            other = RationalDirichletPoly.from_poly(other)
        return isinstance(other, RationalDirichletPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else 1

    def denominator(self) -> int:
        return math.lcm(1, *(q.denominator for q in self.coeffs.values()))

    def integer_arrays(self, scale: int) -> tuple[np.ndarray, np.ndarray]:
        """Degrees and ``scale * q_f`` as exact integer arrays (scale must clear denominators)."""
        degs = list(self.coeffs)
        vals = []
        for q in self.coeffs.values():
            v = q * scale
            if v.denominator != 1:
                raise NonIntegralCoefficient(f"{scale} does not clear denominator of {q}")
            vals.append(int(v))
        return _as_array(degs), _as_array(vals)

    def to_poly(self) -> DirichletPoly:
        bad = {f: q for f, q in self.coeffs.items() if q.denominator != 1 or q < 0}
        if bad:
            raise NonIntegralCoefficient(f"not a nonnegative integral series: {bad}")
        return DirichletPoly.from_terms({f: int(q) for f, q in self.coeffs.items()})

    def evaluate(self, s: complex) -> complex:
        return sum(float(q) * cmath.exp(-complex(s) * math.log(f)) for f, q in self.coeffs.items())

    def triples(self) -> list[list[int]]:
        return [[f, q.numerator, q.denominator] for f, q in self.coeffs.items()]

    def __repr__(self) -> str:
        parts = []
        for f, q in self.coeffs.items():
            parts.append(f"{q}" if f == 1 else f"{q}*{f}^-s")
        return "RationalDirichletPoly(" + (" + ".join(parts) or "0") + ")"


def scale(a: DirichletPoly, c) -> RationalDirichletPoly:
    return RationalDirichletPoly.from_poly(a).scaled(c)


# ---------------------------------------------------------------------------
# Weyl dimension polynomials of the rank-2 simple compact groups


def _weyl_dim(kind: str, m1: int, m2: int) -> int:
    a, b = m1 + 1, m2 + 1
    if kind == "SU3":
        return a * b * (a + b) // 2
    if kind == "Spin5":
        return a * b * (a + b) * (2 * a + b) // 6
    if kind == "G2":
        return a * b * (a + b) * (a + 2 * b) * (a + 3 * b) * (2 * a + 3 * b) // 120
    raise ValueError(f"unknown rank-2 type {kind!r}")


def weyl_zeta(kind: str, N: int) -> DirichletPoly:
    """Truncation at N of sum_{m1,m2>=0} dim(m1,m2)^{-s} for SU3, Spin5 or G2."""
    acc: dict[int, int] = {}
    m1 = 0
    # dimensions grow in each index, so stop scanning a row once past N
    while _weyl_dim(kind, m1, 0) <= N:
        m2 = 0
        while True:
            d = _weyl_dim(kind, m1, m2)
            if d > N:
                break
            acc[d] = acc.get(d, 0) + 1
            m2 += 1
        m1 += 1
    return DirichletPoly.from_terms(acc, N)
