"""Class numbers of the finite iterated wreath products of C2 (levels 0..5).

    python repro/c2_class_numbers.py [kmax]

The class number is the value at s = 0, i.e. the sum of all multiplicities.
Expected: 1, 2, 5, 20, 230, 26795.
"""
from __future__ import annotations

import sys

from wreathzeta import builtin, finite_level_zeta


def main(kmax: int = 5) -> None:
    C2 = builtin("C2")
    for k in range(kmax + 1):
        z = finite_level_zeta(C2, k)
        print(k, sum(r for _, r in z.terms), len(z))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
