"""Finite permutation groups with explicit element lists.

Groups here are small (the default enumeration cap is 10**6 elements), so
everything is brute force over a sorted numpy array of elements.  Points are
1-based in the public :class:`Permutation` / :class:`OrbitPartition` types and
0-based inside element arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import DegreeMismatch, NotFaithful, OrderExceedsBound, UnknownPartition

DEFAULT_BOUND = 10**6

_DTYPE = np.int32


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..degree}; ``images[i-1]`` is the image of ``i``.

    ``p * q`` applies ``q`` first, then ``p``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        imgs = list(range(1, degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def from_array(cls, arr) -> Permutation:
        return cls(tuple(int(x) + 1 for x in arr))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise DegreeMismatch("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=_DTYPE) - 1

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({cyc or '()'}, degree={self.degree})"


def _row_keys(rows: np.ndarray) -> list[bytes]:
    rows = np.ascontiguousarray(rows, dtype=np.uint16)
    if rows.shape[0] == 0:
        return []
    return rows.view(np.dtype((np.void, 2 * rows.shape[1]))).ravel().tolist()


def _lex_sorted(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] <= 1:
        return rows
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def _closure_rows(degree: int, gens: list[np.ndarray], bound: int) -> np.ndarray:
    ident = np.arange(degree, dtype=_DTYPE)
    known = {_row_keys(ident[None, :])[0]}
    chunks = [ident[None, :]]
    frontier = ident[None, :]
    while frontier.shape[0]:
        if not gens:
            break
        cand = np.concatenate([frontier[:, g] for g in gens])
        cand = np.unique(cand, axis=0)
        keys = _row_keys(cand)
        fresh = [i for i, k in enumerate(keys) if k not in known]
        known.update(keys[i] for i in fresh)
        if len(known) > bound:
            raise OrderExceedsBound(f"group order exceeds bound {bound}")
        frontier = cand[fresh]
        chunks.append(frontier)
    return _lex_sorted(np.concatenate(chunks))


class PermGroup:
    """A finite permutation group on {1..degree} with its full element list.

    ``elements`` is an ``(order, degree)`` array of 0-based images, sorted
    lexicographically, so the identity is always row 0.
    """

    def __init__(self, degree: int, elements: np.ndarray,
                 generators: Sequence[Permutation] | None = None, name: str | None = None):
        self.degree = int(degree)
        self.elements = np.ascontiguousarray(elements, dtype=_DTYPE)
        self.elements.setflags(write=False)
        self._generators = None if generators is None else list(generators)
        self.name = name

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    @cached_property
    def generators(self) -> list[Permutation]:
        if self._generators is not None:
            return self._generators
        return _greedy_generators(self)

    @cached_property
    def _index(self) -> dict[bytes, int]:
        return {k: i for i, k in enumerate(_row_keys(self.elements))}

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        """Positions of the given element rows in ``elements`` (KeyError if absent)."""
        idx = self._index
        return np.fromiter((idx[k] for k in _row_keys(rows)), dtype=np.int64,
                           count=rows.shape[0])

    def contains(self, perm: Permutation) -> bool:
        return perm.degree == self.degree and _row_keys(perm.array()[None, :])[0] in self._index

    def __contains__(self, perm: Permutation) -> bool:
        return self.contains(perm)

    def __iter__(self) -> Iterator[Permutation]:
        return (Permutation.from_array(r) for r in self.elements)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def inverse_rows(self) -> np.ndarray:
        inv = np.empty_like(self.elements)
        rows = np.arange(self.order)[:, None]
        inv[rows, self.elements] = np.arange(self.degree, dtype=_DTYPE)[None, :]
        return inv

    def key(self) -> bytes:
        return self.elements.tobytes() + self.degree.to_bytes(4, "little")

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self.order == other.order and np.array_equal(self.elements, other.elements))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} of order {self.order} on {self.degree} points>"


def close_generators(generators: Sequence[Permutation], bound: int = DEFAULT_BOUND,
                     degree: int | None = None, name: str | None = None) -> PermGroup:
    """The group generated by ``generators``; ``degree`` is needed only when empty."""
    generators = list(generators)
    degrees = {g.degree for g in generators}
    if len(degrees) > 1:
        raise DegreeMismatch(f"generators have different degrees {sorted(degrees)}")
    if degrees:
        (gdeg,) = degrees
        if degree is not None and degree != gdeg:
            raise DegreeMismatch(f"generators have degree {gdeg}, expected {degree}")
        degree = gdeg
    if degree is None:
        raise DegreeMismatch("degree must be given for an empty generating set")
    rows = _closure_rows(degree, [g.array() for g in generators], bound)
    return PermGroup(degree, rows, generators, name=name)


def _greedy_generators(G: PermGroup) -> list[Permutation]:
    gens: list[Permutation] = []
    have = {_row_keys(G.elements[:1])[0]}
    for row, k in zip(G.elements, _row_keys(G.elements)):
        if k in have:
            continue
        gens.append(Permutation.from_array(row))
        sub = _closure_rows(G.degree, [g.array() for g in gens], G.order)
        have = set(_row_keys(sub))
        if len(have) == G.order:
            break
    return gens


def subgroup_from_rows(G: PermGroup, rows: np.ndarray) -> PermGroup:
    """Wrap a subset of G's elements already known to be closed."""
    return PermGroup(G.degree, _lex_sorted(np.asarray(rows, dtype=_DTYPE)))


def trivial_group(degree: int) -> PermGroup:
    return close_generators([], degree=degree, name="1")


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class OrbitPartition:
    """A set partition of {1..degree} in canonical form (blocks sorted by minimum)."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(int(x) for x in b)) for b in self.blocks),
                              key=lambda b: b[0] if b else 0))
        pts = [x for b in blocks for x in b]
        if any(len(b) == 0 for b in blocks) or sorted(pts) != list(range(1, len(pts) + 1)):
            raise ValueError(f"blocks do not partition 1..n: {self.blocks}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> OrbitPartition:
        groups: dict[int, list[int]] = {}
        for pt, lab in enumerate(labels, start=1):
            groups.setdefault(int(lab), []).append(pt)
        return cls(tuple(tuple(v) for v in groups.values()))

    @property
    def degree(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    @cached_property
    def labels(self) -> np.ndarray:
        """0-based array mapping each point to the 0-based minimum of its block."""
        lab = np.empty(self.degree, dtype=_DTYPE)
        for b in self.blocks:
            lab[np.asarray(b) - 1] = b[0] - 1
        return lab

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(b) for b in self.blocks))

    def refines(self, other: OrbitPartition) -> bool:
        """True when every block of self lies inside a block of ``other``."""
        lab = other.labels
        return all(len({lab[x - 1] for x in b}) == 1 for b in self.blocks)

    def to_list(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __repr__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def _orbit_labels(elements: np.ndarray) -> np.ndarray:
    # orbit of x is the column elements[:, x] since elements form a group
    return elements.min(axis=0)


def orbit_partition(G: PermGroup) -> OrbitPartition:
    return OrbitPartition.from_labels(_orbit_labels(G.elements))


def is_transitive(G: PermGroup) -> bool:
    return len(orbit_partition(G)) == 1


def _stabilizer_mask(G: PermGroup, labels: np.ndarray) -> np.ndarray:
    return np.all(labels[G.elements] == labels[None, :], axis=1)


def partition_stabilizer(G: PermGroup, P: OrbitPartition) -> PermGroup:
    """Elements of G mapping every block of P onto itself."""
    if P.degree != G.degree:
        raise DegreeMismatch(f"partition on {P.degree} points, group on {G.degree}")
    return subgroup_from_rows(G, G.elements[_stabilizer_mask(G, P.labels)])


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of n points as restricted growth strings."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i: int, m: int):
        if i == n:
            yield tuple(a)
            return
        for v in range(m + 2):
            a[i] = v
            yield from rec(i + 1, max(m, v))

    a[0] = 0
    yield from rec(1, 0)


@dataclass
class PartitionLattice:
    """The lattice of orbit partitions of subgroups of Q, finest first.

    ``mobius[i, j]`` is the Möbius value between ``partitions[i]`` and
    ``partitions[j]``; ``leq[i, j]`` says partition i refines partition j.
    """

    group: PermGroup
    partitions: list[OrbitPartition]
    stabilizers: list[PermGroup]
    leq: np.ndarray
    mobius: np.ndarray
    _position: dict[OrbitPartition, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._position = {P: i for i, P in enumerate(self.partitions)}

    def __len__(self) -> int:
        return len(self.partitions)

    def position(self, P: OrbitPartition) -> int:
        try:
            return self._position[P]
        except KeyError:
            raise UnknownPartition(f"{P!r} is not in the lattice") from None

    @property
    def bottom(self) -> OrbitPartition:
        return self.partitions[0]

    @property
    def top(self) -> OrbitPartition:
        return self.partitions[-1]

    def index(self, i: int) -> int:
        """[Q : Q_P] for the i-th partition."""
        return self.group.order // self.stabilizers[i].order


def _mobius_matrix(leq: np.ndarray) -> np.ndarray:
    n = leq.shape[0]
    mu = np.zeros((n, n), dtype=np.int64)
    L = leq.astype(np.int64)
    for i in range(n):
        mu[i, i] = 1
        for j in range(i + 1, n):
            if leq[i, j]:
                # sum over i <= k < j; mu[i, k] vanishes unless i <= k
                mu[i, j] = -int(mu[i, :j] @ L[:j, j])
    return mu


def enumerate_lattice(Q: PermGroup) -> PartitionLattice:
    """Partitions P of the points with orbit_partition(Q_P) == P, plus Möbius data."""
    n = Q.degree
    E = Q.elements
    found: list[tuple[OrbitPartition, np.ndarray]] = []
    for rgs in restricted_growth_strings(n):
        rgs = np.asarray(rgs)
        first = np.zeros(rgs.max() + 1 if n else 0, dtype=_DTYPE)
        for pt in range(n - 1, -1, -1):
            first[rgs[pt]] = pt
        labels = first[rgs]
        mask = _stabilizer_mask(Q, labels)
        if np.array_equal(_orbit_labels(E[mask]), labels):
            found.append((OrbitPartition.from_labels(labels), mask))
    found.sort(key=lambda item: (-len(item[0]), item[0].blocks))
    parts = [P for P, _ in found]
    stabs = [subgroup_from_rows(Q, E[mask]) for _, mask in found]
    if stabs[0].order != 1:
        raise NotFaithful("a non-identity element fixes every point")
    m = len(parts)
    labs = np.array([P.labels for P in parts])
    leq = np.zeros((m, m), dtype=bool)
    for i, P in enumerate(parts):
        blocks = [np.asarray(b) - 1 for b in P.blocks]
        for j in range(m):
            lj = labs[j]
            leq[i, j] = all((lj[b] == lj[b[0]]).all() for b in blocks)
    return PartitionLattice(Q, parts, stabs, leq, _mobius_matrix(leq))


def mobius(L: PartitionLattice, P: OrbitPartition, P2: OrbitPartition) -> int:
    return int(L.mobius[L.position(P), L.position(P2)])


# ---------------------------------------------------------------------------
# classes, commutators, products


@dataclass(frozen=True)
class ClassData:
    labels: np.ndarray  # class id per element index
    representatives: np.ndarray  # element index of each class's first member
    sizes: np.ndarray


def class_data(G: PermGroup) -> ClassData:
    cached = G.__dict__.get("_class_data")
    if cached is not None:
        return cached
    n = G.order
    rows, cols = [np.arange(n)], [np.arange(n)]
    for g in G.generators:
        ga = g.array()
        ginv = g.inverse().array()
        conj = ga[G.elements[:, ginv]]
        rows.append(np.arange(n))
        cols.append(G.index_of(conj))
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones(r.size, dtype=np.int8), (r, c)), shape=(n, n))
    _, raw = connected_components(graph, directed=True, connection="weak")
    # renumber classes by their smallest element index (identity class first)
    first = np.full(raw.max() + 1, n, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(n))
    order = np.argsort(first)
    relabel = np.empty_like(order)
    relabel[order] = np.arange(order.size)
    labels = relabel[raw]
    data = ClassData(labels, first[order], np.bincount(labels))
    G.__dict__["_class_data"] = data
    return data


def conjugacy_classes(G: PermGroup) -> list[tuple[Permutation, int]]:
    cd = class_data(G)
    return [(Permutation.from_array(G.elements[i]), int(s))
            for i, s in zip(cd.representatives, cd.sizes)]


def _compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return p[q]


def _inv(p: np.ndarray) -> np.ndarray:
    out = np.empty_like(p)
    out[p] = np.arange(p.size, dtype=p.dtype)
    return out


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Normal closure of the commutators of the generators."""
    gens = [g.array() for g in G.generators]
    comms = []
    for a in gens:
        for b in gens:
            c = _compose(_compose(_inv(a), _inv(b)), _compose(a, b))
            comms.append(c)
    sub_gens = comms
    rows = _closure_rows(G.degree, sub_gens, G.order)
    while True:
        keys = set(_row_keys(rows))
        extra = None
        for g in gens:
            gi = _inv(g)
            for h in sub_gens:
                c = _compose(_compose(g, h), gi)
                if _row_keys(c[None, :])[0] not in keys:
                    extra = c
                    break
            if extra is not None:
                break
        if extra is None:
            return PermGroup(G.degree, rows)
        sub_gens = sub_gens + [extra]
        rows = _closure_rows(G.degree, sub_gens, G.order)


def is_perfect(G: PermGroup) -> bool:
    return derived_subgroup(G).order == G.order


def abelianization_order(G: PermGroup) -> int:
    return G.order // derived_subgroup(G).order


def wreath_product_group(H: PermGroup, Q: PermGroup, bound: int = DEFAULT_BOUND) -> PermGroup:
    """Imprimitive action of H wr_X Q on Y x X; point (y, x) is ``x*|Y| + y`` (0-based)."""
    ny, nx = H.degree, Q.degree
    if H.order ** nx * Q.order > bound:
        raise OrderExceedsBound(f"|H|^|X|*|Q| = {H.order ** nx * Q.order} exceeds {bound}")
    gens = []
    for x in range(nx):
        for h in H.generators:
            imgs = np.arange(ny * nx, dtype=_DTYPE)
            imgs[x * ny:(x + 1) * ny] = h.array() + x * ny
            gens.append(Permutation.from_array(imgs))
    for q in Q.generators:
        qa = q.array()
        imgs = np.empty(ny * nx, dtype=_DTYPE)
        for x in range(nx):
            imgs[x * ny:(x + 1) * ny] = np.arange(ny) + qa[x] * ny
        gens.append(Permutation.from_array(imgs))
    name = f"{H.name or 'H'} wr {Q.name or 'Q'}"
    return close_generators(gens, bound=bound, degree=ny * nx, name=name)


def direct_product(G: PermGroup, H: PermGroup, bound: int = DEFAULT_BOUND) -> PermGroup:
    """G x H acting on the disjoint union of the two point sets."""
    n = G.degree + H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(g.images + tuple(range(G.degree + 1, n + 1))))
    for h in H.generators:
        gens.append(Permutation(tuple(range(1, G.degree + 1))
                                + tuple(x + G.degree for x in h.images)))
    return close_generators(gens, bound=bound, degree=n)
