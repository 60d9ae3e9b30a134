"""How the witness exponent n grows as |r| approaches 1.

For r = {inf: (1 + eps) / q, p: q} with q not a power of p, |r| = 1 + eps and
the search must find e/n within about eps / ln p of log_p q.  Prints one CSV
row per eps with the n found, the exponent e of alpha = p**e, and the
pigeonhole ceiling on n.
"""

import argparse
import csv
import math
import sys

from arithcap.adelic import RadiusAssignment, radius_norm, to_fraction, valuation
from arithcap.errors import SearchExhausted
from arithcap.fekete import find_scaling


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prime", type=int, default=2)
    ap.add_argument("--radius", default="3/2", help="finite radius at the prime, as p/q")
    ap.add_argument("--max-n", type=int, default=10_000)
    ap.add_argument("--eps", type=float, nargs="*", default=[10.0**-k for k in range(1, 9)])
    args = ap.parse_args()

    q = to_fraction(args.radius)
    out = csv.writer(sys.stdout)
    out.writerow(["eps", "radius_norm", "n", "e", "pigeonhole_n"])
    for eps in args.eps:
        r = RadiusAssignment.from_mapping(1, {"inf": (1 + eps) / float(q), args.prime: q})
        ceiling = math.ceil(math.log(args.prime) / math.log1p(eps))
        try:
            s = find_scaling(r, max_n=args.max_n)
            out.writerow([eps, radius_norm(r), s.n, valuation(s.alpha, args.prime), ceiling])
        except SearchExhausted:
            out.writerow([eps, radius_norm(r), "", "", ceiling])
    return 0


if __name__ == "__main__":
    sys.exit(main())
