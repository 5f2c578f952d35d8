"""Functional equation and sigma0 for PSL2(F5) on 6 points and PGL3(F2) on 7 points.

    python repro/catalog_groups.py [N]

The polynomial is printed in the grouped X-monomial form; its last line is the -X1 term.
"""
from __future__ import annotations

import sys

from wreathzeta import analysis, builtin, build_context, functional_equation, limit_zeta
from wreathzeta.cli import _int


def main(N: int) -> None:
    for name in ("PSL2_F5_on6", "PGL3_F2_on7"):
        Q = builtin(name)
        fe = functional_equation(build_context(Q))
        print(f"== {name} (order {Q.order}, degree {Q.degree})")
        print(fe.render())
        L = limit_zeta(Q, N, track=False)
        s0 = analysis.sigma0(fe, L.coefficients, tol=0.0)
        print(f"terms <= {N:.0e}: {len(L.coefficients)}; sigma0 = {s0:.12f}\n")


if __name__ == "__main__":
    main(_int(sys.argv[1]) if len(sys.argv) > 1 else 10 ** 12)
