"""Coefficient table of the limit zeta function of W(A5) up to degree 10^4.

    python repro/a5_table.py [N]

Prints [n, r_n] pairs, eight per line, and the number of terms (93 at N = 10^4).
"""
from __future__ import annotations

import sys

from wreathzeta import builtin, limit_zeta
from wreathzeta.cli import _int


def main(N: int = 10 ** 4) -> None:
    L = limit_zeta(builtin("A5"), N)
    pairs = [f"[{n}, {r}]" for n, r in L.coefficients.terms]
    for i in range(0, len(pairs), 8):
        print(", ".join(pairs[i:i + 8]))
    print(f"# {len(pairs)} terms, {L.iterations_used} iterations")


if __name__ == "__main__":
    main(_int(sys.argv[1]) if len(sys.argv) > 1 else 10 ** 4)
