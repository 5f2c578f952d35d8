"""Number of nonzero coefficients of the W(A5) limit below a list of bounds.

    python repro/a5_term_count.py            # 1e10, 1e12 and a few bounds just above
    python repro/a5_term_count.py 1e12 2e12

One run at the largest bound is enough; smaller bounds are read off by truncation.
Expect roughly 2 s at 1e12.
"""
from __future__ import annotations

import sys
import time

from wreathzeta import builtin, limit_zeta
from wreathzeta.cli import _int

DEFAULT = [10 ** 10, 10 ** 12, 1_010_000_000_000, 1_020_000_000_000]


def main(bounds: list[int]) -> None:
    t = time.perf_counter()
    top = limit_zeta(builtin("A5"), max(bounds), track=False)
    print(f"# computed to N = {max(bounds)} in {time.perf_counter() - t:.1f} s, "
          f"{top.iterations_used} iterations")
    print("N,terms,largest_degree")
    for N in sorted(bounds):
        Z = top.coefficients.truncate(N)
        print(f"{N},{len(Z)},{Z.max_degree()}")


if __name__ == "__main__":
    main([_int(a) for a in sys.argv[1:]] or DEFAULT)
