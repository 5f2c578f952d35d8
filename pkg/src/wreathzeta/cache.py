"""On-disk cache of limit coefficients, enabled by WREATH_ZETA_CACHE=<dir>."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .dirichlet import DirichletPoly
from .permgroup import PermGroup

ENV = "WREATH_ZETA_CACHE"


def cache_dir() -> Path | None:
    d = os.environ.get(ENV)
    return Path(d) if d else None


def group_key(G: PermGroup) -> str:
    # hash the sorted element table, not the generators, so equal groups share a file
    digest = hashlib.sha256(G.elements.astype("<i4").tobytes()).hexdigest()[:16]
    return f"{G.name or 'group'}-{G.degree}-{digest}"


def _path(G: PermGroup, N: int) -> Path | None:
    d = cache_dir()
    return None if d is None else d / f"limit_{group_key(G)}_N{N}.json"


def load(G: PermGroup, N: int) -> tuple[DirichletPoly, int] | None:
    p = _path(G, N)
    if p is None or not p.exists():
        return None
    data = json.loads(p.read_text())
    poly = DirichletPoly.from_terms([tuple(t) for t in data["terms"]], data["truncation"])
    return poly, int(data["iterations_used"])


def store(G: PermGroup, N: int, poly: DirichletPoly, iterations: int) -> None:
    p = _path(G, N)
    if p is None:
        return
    p.parent.mkdir(parents=True, exist_ok=True)
    tmp = p.with_suffix(".tmp")
    tmp.write_text(json.dumps({"group": group_key(G), "truncation": N,
                               "iterations_used": iterations,
                               "terms": [[n, r] for n, r in poly.terms]}))
    tmp.replace(p)
