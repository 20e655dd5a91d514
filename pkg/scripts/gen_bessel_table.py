#!/usr/bin/env python3
"""Regenerate tests/_bessel_table.py from the extended-precision series oracle.

Run from the repository root:  python3 scripts/gen_bessel_table.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import numpy as np

from oracles import oracle_bessel_j, oracle_bessel_k

# 50 abscissae per family: log-spaced through each function's contract domain.
X_J = np.unique(
    np.concatenate(
        [
            np.logspace(-6, np.log10(50.0), 44),
            [0.5, 1.0, 2.0, 5.0, 10.0, 25.0],
        ]
    )
)
X_K = np.unique(
    np.concatenate(
        [
            np.logspace(-6, np.log10(200.0), 44),
            [0.5, 1.0, 2.0, 5.0, 10.0, 25.0],
        ]
    )
)

HEADER = '''"""Frozen Bessel oracle table (50 abscissae per family).

Generated by scripts/gen_bessel_table.py from the extended-precision series
oracle in tests/oracles.py. Do not edit by hand; regenerate instead.
"""

'''


def emit(name, xs, fn):
    rows = []
    for x in xs:
        x = float(x)
        vals = ", ".join(repr(fn(n, x)) for n in (0, 1, 2))
        rows.append(f"    ({x!r}, ({vals})),")
    body = "\n".join(rows)
    return f"{name} = [\n{body}\n]\n"


def main():
    out = Path(__file__).resolve().parent.parent / "tests" / "_bessel_table.py"
    text = HEADER
    text += "# (x, (J0, J1, J2))\n"
    text += emit("J_TABLE", X_J, oracle_bessel_j)
    text += "\n# (x, (K0, K1, K2))\n"
    text += emit("K_TABLE", X_K, oracle_bessel_k)
    out.write_text(text)
    print(f"wrote {out} with {len(X_J)} J rows and {len(X_K)} K rows")


if __name__ == "__main__":
    main()
