"""Command-line interface: ``wreathzeta <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis, cache
from .catalog import BUILTINS, builtin, load_group
from .chardeg import degree_pattern
from .dirichlet import DirichletPoly
from .errors import WreathZetaError
from .limit import finite_level_zeta, limit_zeta
from .permgroup import PermGroup
from .wreath import build_context, functional_equation, wreath_zeta

LARGE_DUMP = 1000  # terms; above this coefficient dumps go to a file


def _int(text: str) -> int:
    """Accepts 10000, 1e12, 10**12."""
    t = text.strip().replace("_", "")
    if "**" in t:
        b, e = t.split("**")
        return int(b) ** int(e)
    if "e" in t.lower():
        mant, exp = t.lower().split("e")
        if "." not in mant:
            return int(mant) * 10 ** int(exp)
    v = float(t) if "." in t else int(t)
    if int(v) != v:
        raise argparse.ArgumentTypeError(f"not an integer: {text}")
    return int(v)


def _pair(text: str) -> tuple[float, float]:
    a, b = text.split(",")
    return float(a), float(b)


def _complex(text: str) -> complex:
    if "," in text:
        a, b = text.split(",")
        return complex(float(a), float(b))
    return complex(text.replace("i", "j"))


def _region(text: str) -> tuple[float, float, float, float]:
    vals = [float(x) for x in text.split(",")]
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("region is re0,re1,im0,im1")
    return tuple(vals)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("group and output")
    g.add_argument("--group", default="A5", help=f"builtin group ({', '.join(BUILTINS)}, Cn, Sn, An, Dn)")
    g.add_argument("--group-file", type=Path, help="JSON group file; overrides --group")
    g.add_argument("--truncate", type=_int, default=None, metavar="N", help="degree bound N")
    g.add_argument("--format", choices=("csv", "json", "text"), default="text")
    g.add_argument("--out", type=Path, help="write the report here instead of stdout")
    g.add_argument("--seed", type=int, default=0, help="seed for the degree extraction")
    g.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads (accepted; the computation is sequential)")

    p = argparse.ArgumentParser(prog="wreathzeta",
                                description="Representation zeta functions of iterated wreath products.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("degrees", parents=[common], help="irreducible degree pattern of a group")

    w = sub.add_parser("wreath", parents=[common], help="zeta of H wr Q")
    w.add_argument("--h", default="C2", help="builtin name of H")
    w.add_argument("--h-pattern", type=Path, help="CSV degree,multiplicity file for zeta_H")

    sub.add_parser("fe", parents=[common], help="functional equation polynomial Psi")

    sub.add_parser("limit", parents=[common], help="limit zeta coefficients up to N")

    lv = sub.add_parser("level", parents=[common], help="zeta of the k-th iterated wreath product")
    lv.add_argument("--k", type=int, required=True)

    numeric = argparse.ArgumentParser(add_help=False)
    numeric.add_argument("--tol", type=float, default=0.0, help="bisection width (0: full precision)")
    numeric.add_argument("--bracket", type=_pair, default=analysis.DEFAULT_BRACKET, metavar="L,U")

    sub.add_parser("sigma0", parents=[common, numeric], help="abscissa of convergence by bisection")
    pu = sub.add_parser("puiseux", parents=[common, numeric], help="expansion at sigma0")
    pu.add_argument("--depth", type=int, default=3)

    tr = sub.add_parser("trace", parents=[common], help="continuation along s = n*eps")
    tr.add_argument("--eps", type=_complex, default=complex(0.01, 0.01), metavar="RE,IM")
    tr.add_argument("--steps", type=int, default=300)

    sc = sub.add_parser("scan", parents=[common], help="zeros of the discriminant of Phi")
    sc.add_argument("--region", type=_region, default=(0.85, 0.95, -0.05, 0.05),
                    metavar="RE0,RE1,IM0,IM1")
    sc.add_argument("--grid", type=int, default=41)
    return p


# ---------------------------------------------------------------------------


def _group(args) -> PermGroup:
    return load_group(args.group_file) if args.group_file else builtin(args.group)


def _limit(G: PermGroup, N: int):
    hit = cache.load(G, N)
    ctx = build_context(G)
    if hit is not None:
        return hit[0], hit[1], ctx
    L = limit_zeta(ctx, N, track=False)
    cache.store(G, N, L.coefficients, L.iterations_used)
    return L.coefficients, L.iterations_used, ctx


def _poly_report(poly: DirichletPoly, fmt: str, footer: dict) -> str:
    if fmt == "json":
        return json.dumps({"terms": [[n, r] for n, r in poly.terms], "footer": footer}) + "\n"
    if fmt == "csv":
        return "degree,multiplicity\n" + poly.to_csv() + "# " + json.dumps(footer) + "\n"
    return repr(poly) + "\n" + "# " + json.dumps(footer) + "\n"


def _value_report(result: dict, fmt: str, footer: dict) -> str:
    if fmt == "json":
        return json.dumps({**result, "footer": footer}) + "\n"
    if fmt == "csv":
        keys = list(result)
        return ",".join(keys) + "\n" + ",".join(str(result[k]) for k in keys) + "\n" \
            + "# " + json.dumps(footer) + "\n"
    return "".join(f"{k}: {v}\n" for k, v in result.items()) + "# " + json.dumps(footer) + "\n"


def _cplx(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def run(args) -> str:
    G = _group(args)
    cmd = args.command
    N = args.truncate
    if cmd == "degrees":
        D = degree_pattern(G, seed=args.seed)
        return _poly_report(D.zeta, args.format, {"order": G.order, "classes": D.class_count})
    if cmd == "wreath":
        if args.h_pattern:
            zh = DirichletPoly.from_csv(args.h_pattern.read_text())
        else:
            zh = degree_pattern(builtin(args.h), seed=args.seed).zeta
        z = wreath_zeta(zh, build_context(G, seed=args.seed), N)
        return _poly_report(z, args.format, {"N": N})
    if cmd == "fe":
        fe = functional_equation(build_context(G, seed=args.seed))
        if args.format == "json":
            return json.dumps(fe.to_json()) + "\n"
        return fe.render() + "\n"
    if cmd == "level":
        z = finite_level_zeta(G, args.k, N)
        return _poly_report(z, args.format, {"N": N, "k": args.k})

    N = args.truncate = N or 10 ** 12
    Z, iters, ctx = _limit(G, N)
    footer = {"N": N, "iterations_used": iters}
    if cmd == "limit":
        return _poly_report(Z, args.format, footer)
    fe = functional_equation(ctx)
    if cmd in ("sigma0", "puiseux"):
        r = analysis.sigma0_search(fe, Z, args.bracket, args.tol)
        footer.update(tol=args.tol, tol_im=analysis.TOL_IM, bisection_steps=r.iterations,
                      bracket=list(args.bracket))
        if cmd == "sigma0":
            return _value_report({"sigma0": repr(r.sigma0), "lower": repr(r.lower),
                                  "upper": repr(r.upper)}, args.format, footer)
        P = analysis.puiseux(fe, Z, r.sigma0, depth=args.depth)
        footer.update(cluster_tol=analysis.CLUSTER_TOL, ladder_points=len(P.ladder),
                      misfit=P.misfit)
        res = {"sigma0": repr(P.sigma0), "e": P.e}
        res.update({f"a{i}": repr(float(a)) for i, a in enumerate(P.coefficients)})
        return _value_report(res, args.format, footer)
    if cmd == "trace":
        T = analysis.continuation(fe, Z, args.eps, args.steps)
        footer.update(eps=_cplx(args.eps), steps=args.steps)
        if args.format == "json":
            return json.dumps({"points": [[n, *_cplx(z)] for n, z in T.points],
                               "footer": footer}) + "\n"
        lines = ["n,re,im"] + [f"{n},{z.real!r},{z.imag!r}" for n, z in T.points]
        return "\n".join(lines) + "\n# " + json.dumps(footer) + "\n"
    if cmd == "scan":
        found = analysis.scan_singularities(fe, Z, args.region, grid=args.grid)
        footer.update(region=list(args.region), grid=args.grid)
        if args.format == "json":
            return json.dumps({"candidates": [_cplx(z) for z in found], "footer": footer}) + "\n"
        lines = ["re,im"] + [f"{z.real!r},{z.imag!r}" for z in found]
        return "\n".join(lines) + "\n# " + json.dumps(footer) + "\n"
    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except WreathZetaError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 2
    out = args.out
    if out is None and args.command in ("limit", "level") and report.count("\n") > LARGE_DUMP:
        ext = "json" if args.format == "json" else "csv"
        name = args.group_file.stem if args.group_file else args.group
        out = Path(f"{args.command}_{name}_N{args.truncate}.{ext}")
        print(f"large output written to {out}", file=sys.stderr)
    if out is not None:
        out.write_text(report)
    else:
        sys.stdout.write(report)
    return 0


if __name__ == "__main__":
    sys.exit(main())
