#!/usr/bin/env python3
"""Scan the signature function of a family knot along a root-of-unity grid.

Prints sigma at k/d for k = 1..d/2, flags singular points (where the
Hermitian form degenerates), and for torus knots shows the closed-form
value next to the definitional one so the jump-point convention is
visible.

    python scripts/signature_scan.py torus2:3 --d 60
    python scripts/signature_scan.py jn:4 --d 48
"""

import argparse
import sys
from fractions import Fraction

from knotrho.cli import parse_knot_spec
from knotrho.cyclotomic import UnitRoot
from knotrho.signature import (
    alexander_at,
    avg_signature,
    levine_tristram,
    litherland_torus_signature,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("spec", help="unknot | torus2:<n> | jn:<n> | file:<path>")
    parser.add_argument("--d", type=int, default=60, help="grid order (default 60)")
    args = parser.parse_args()

    label, matrix = parse_knot_spec(args.spec)
    torus_n = None
    if label.startswith("torus2:"):
        torus_n = int(label.split(":")[1])

    header = f"{'k/d':>8}  {'sigma':>5}  {'singular':>8}"
    if torus_n is not None:
        header += f"  {'closed form':>11}"
    print(header)
    for k in range(1, args.d // 2 + 1):
        root = UnitRoot(k, args.d)
        sigma = levine_tristram(matrix, root)
        singular = (not root.is_one) and alexander_at(matrix, root).is_zero
        line = f"{f'{k}/{args.d}':>8}  {sigma:>5}  {str(singular):>8}"
        if torus_n is not None:
            closed = litherland_torus_signature(torus_n, Fraction(k, args.d))
            line += f"  {closed:>11}"
        print(line)
    print(f"\naverage over all d-th roots: {avg_signature(matrix, args.d)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
