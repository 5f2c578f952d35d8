"""Abscissa of convergence and the square-root expansion at it, for W(A5).

    python repro/a5_sigma0_puiseux.py [N]

sigma0 is computed at N (default 1e12) and at N/100 to show the truncation effect.
"""
from __future__ import annotations

import sys

from wreathzeta import analysis, builtin, build_context, functional_equation, limit_zeta
from wreathzeta.cli import _int


def main(N: int) -> None:
    fe = functional_equation(build_context(builtin("A5")))
    for M in (N // 100, N):
        Z = limit_zeta(builtin("A5"), M, track=False).coefficients
        print(f"sigma0(N={M:.0e}) = {analysis.sigma0(fe, Z, tol=0.0):.16f}")
    s0 = analysis.sigma0(fe, Z, tol=0.0)
    P = analysis.puiseux(fe, Z, s0, depth=3)
    print(f"ramification e = {P.e}, fit misfit = {P.misfit:.1e}")
    for k, a in enumerate(P.coefficients):
        print(f"a{k} = {a:+.10f}")


if __name__ == "__main__":
    main(_int(sys.argv[1]) if len(sys.argv) > 1 else 10 ** 12)
