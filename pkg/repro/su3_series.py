"""Leading terms of the representation zeta function of SU(3) from the Weyl dimension formula.

    python repro/su3_series.py [N] [kind]

kind is SU3 (default), Spin5 or G2.
"""
from __future__ import annotations

import sys

from wreathzeta.dirichlet import weyl_zeta


def main(N: int = 66, kind: str = "SU3") -> None:
    print(" + ".join(f"{r}*{n}^-s" for n, r in weyl_zeta(kind, N).terms))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 66, sys.argv[2] if len(sys.argv) > 2 else "SU3")
