"""Pullback capacities over a grid of (d, degree, multiplicity), with a 50-digit check.

Writes CSV to stdout: the float capacity, the mpmath value and their relative
difference.
"""

import argparse
import csv
import sys

from arithcap.adelic import RadiusAssignment
from arithcap.capacity import MorphismDescriptor, PullbackCandidate, pullback_sectional_capacity
from arithcap.oracle import mp_pullback_capacity


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radius", type=float, default=2.0, help="archimedean radius; finite radii are 1")
    ap.add_argument("--max-d", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=6)
    ap.add_argument("--max-mult", type=int, default=3)
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["d", "degree", "multiplicity", "exponent", "capacity", "capacity_mp", "rel_diff"])
    for d in range(1, args.max_d + 1):
        r = RadiusAssignment.from_mapping(d, {"inf": args.radius})
        for deg in range(1, args.max_degree + 1):
            for m in range(1, args.max_mult + 1):
                c = PullbackCandidate(MorphismDescriptor(d, deg, m), r)
                got = pullback_sectional_capacity(c)
                want = float(mp_pullback_capacity(d, deg, m, r))
                out.writerow([d, deg, m, c.morphism.exponent, repr(got), repr(want), abs(got - want) / want])
    return 0


if __name__ == "__main__":
    sys.exit(main())
