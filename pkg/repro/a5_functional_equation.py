"""Print the functional equation polynomial for W(Q), A5 by default.

    python repro/a5_functional_equation.py [group] [--json]
"""
from __future__ import annotations

import json
import sys

from wreathzeta import builtin, build_context, functional_equation


def main(name: str = "A5", as_json: bool = False) -> None:
    fe = functional_equation(build_context(builtin(name)))
    print(json.dumps(fe.to_json(), indent=1) if as_json else fe.render())


if __name__ == "__main__":
    args = [a for a in sys.argv[1:] if a != "--json"]
    main(args[0] if args else "A5", "--json" in sys.argv)
