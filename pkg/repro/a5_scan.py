"""Search for complex points left of sigma0 where two roots of the A5 polynomial collide.

    python repro/a5_scan.py [re0 re1 im0 im1] [grid]

Default box is [0.85, 0.95] x [-0.05, 0.05] on a 41x41 grid; candidates are refined
on the discriminant and reported with their remaining root gap.
"""
from __future__ import annotations

import sys

from wreathzeta import analysis, builtin, build_context, functional_equation, limit_zeta


def main(region=(0.85, 0.95, -0.05, 0.05), grid=41) -> None:
    fe = functional_equation(build_context(builtin("A5")))
    Z = limit_zeta(builtin("A5"), 10 ** 12, track=False).coefficients
    for s in analysis.scan_singularities(fe, Z, region, grid=grid):
        gap = analysis.min_root_gap(analysis.instantiate(fe, Z, s))
        print(f"{s.real:.10f} {s.imag:+.10f}i   root gap {gap:.1e}")


if __name__ == "__main__":
    a = [float(x) for x in sys.argv[1:]]
    if len(a) >= 4:
        main(tuple(a[:4]), int(a[4]) if len(a) > 4 else 41)
    else:
        main()
