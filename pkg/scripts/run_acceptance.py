"""Run the acceptance checks and optionally save a JSON summary.

    python3 scripts/run_acceptance.py --scale 1.0 --out results/acceptance.json
"""

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from arithcap.selftest import run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=float, default=1.0, help="fraction of the full case counts")
    ap.add_argument("--out", type=Path, default=None, help="write outcomes as JSON here")
    args = ap.parse_args()

    outcomes = run_all(args.scale, echo=print)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps([asdict(o) for o in outcomes], indent=2) + "\n")
    return 0 if all(o.passed for o in outcomes) else 1


if __name__ == "__main__":
    sys.exit(main())
