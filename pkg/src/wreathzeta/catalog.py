"""Named permutation groups and the JSON group-file format."""

from __future__ import annotations

import itertools
import json
import re
from functools import lru_cache
from pathlib import Path

from .errors import UnknownGroup
from .permgroup import Permutation, PermGroup, close_generators

BUILTINS = ("C2", "C3", "C4", "C5", "C6", "S3", "S4", "S5", "A4", "A5", "A6",
            "PSL2_F5_on6", "PGL3_F2_on7")


def cyclic(n: int) -> PermGroup:
    gens = [Permutation.from_cycles(n, tuple(range(1, n + 1)))] if n > 1 else []
    return close_generators(gens, degree=n, name=f"C{n}")


def symmetric(n: int) -> PermGroup:
    gens = []
    if n > 1:
        gens.append(Permutation.from_cycles(n, (1, 2)))
    if n > 2:
        gens.append(Permutation.from_cycles(n, tuple(range(1, n + 1))))
    return close_generators(gens, degree=n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    gens = []
    if n >= 3:
        gens.append(Permutation.from_cycles(n, (1, 2, 3)))
    if n >= 4:
        cyc = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        gens.append(Permutation.from_cycles(n, cyc))
    return close_generators(gens, degree=n, name=f"A{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of an n-gon, order 2n, on n points."""
    rot = Permutation.from_cycles(n, tuple(range(1, n + 1)))
    refl = Permutation(tuple(((1 - i) % n) + 1 for i in range(1, n + 1)))
    return close_generators([rot, refl], degree=n, name=f"D{n}")


def psl2_f5_on_projective_line() -> PermGroup:
    # points 0..4 of F5 are 1..5, infinity is 6
    inf = 5

    def perm(f):
        return Permutation(tuple(f(z) + 1 for z in range(6)))

    def translate(z):
        return inf if z == inf else (z + 1) % 5

    def scale(z):
        return inf if z == inf else (4 * z) % 5

    def invert(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return (-pow(z, -1, 5)) % 5

    return close_generators([perm(translate), perm(scale), perm(invert)],
                            name="PSL2_F5_on6")


def pgl3_f2_on_projective_plane() -> PermGroup:
    # points are nonzero vectors of F2^3 encoded as 3-bit integers 1..7
    vectors = [v for v in itertools.product((0, 1), repeat=3) if any(v)]
    code = {v: i for i, v in enumerate(vectors)}

    def perm(matrix):
        imgs = []
        for v in vectors:
            w = tuple(sum(matrix[r][c] * v[c] for c in range(3)) % 2 for r in range(3))
            imgs.append(code[w] + 1)
        return Permutation(tuple(imgs))

    shift = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    transvection = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    return close_generators([perm(shift), perm(transvection)], name="PGL3_F2_on7")


_PATTERN = re.compile(r"^([CSAD])(\d+)$")


@lru_cache(maxsize=None)
def builtin(name: str) -> PermGroup:
    if name in ("PSL2_F5_on6", "PSL2F5"):
        return psl2_f5_on_projective_line()
    if name in ("PGL3_F2_on7", "PGL3F2", "GL3_F2_on7"):
        return pgl3_f2_on_projective_plane()
    m = _PATTERN.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n >= 1:
            return {"C": cyclic, "S": symmetric, "A": alternating, "D": dihedral}[kind](n)
    raise UnknownGroup(f"unknown builtin group {name!r}; known: {', '.join(BUILTINS)}")


def group_from_json(data: dict) -> PermGroup:
    if "builtin" in data:
        return builtin(data["builtin"])
    n = int(data["points"])
    gens = [Permutation(tuple(g)) for g in data.get("generators", [])]
    return close_generators(gens, degree=n, name=data.get("name"))


def load_group(path: str | Path) -> PermGroup:
    return group_from_json(json.loads(Path(path).read_text()))


def group_to_json(G: PermGroup) -> dict:
    return {"points": G.degree, "generators": [list(g.images) for g in G.generators]}
