"""Command line entry point: ``arithcap run | selftest | schema``.

Exit codes: 0 all scenarios ok; 1 schema or input violation; 2 numeric
failure; 3 a domain hypothesis (interior equilibrium, |r| > 1) fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .runner import dumps, evaluate_all, exit_code, to_text
from .schema import SCHEMA

log = logging.getLogger("arithcap")


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise SystemExit(f"arithcap: cannot read {path}: {exc}")
    return json.loads(text)


def cmd_run(args) -> int:
    try:
        data = _load(args.path)
    except json.JSONDecodeError as exc:
        print(f"arithcap: input is not valid JSON: {exc}", file=sys.stderr)
        return 1
    batch = data if isinstance(data, list) else [data]
    reports = evaluate_all(batch, global_tol=args.tol, with_oracle=args.with_oracle, jobs=args.jobs)
    for r in reports:
        if not r["status"]["ok"]:
            err = r["status"]["error"]
            log.error("%s: %s", err["code"], err["message"])
    if args.format == "json":
        out = reports if isinstance(data, list) else reports[0]
        sys.stdout.write(dumps(out) + "\n")
    else:
        sys.stdout.write("\n".join(to_text(r) for r in reports) + "\n")
    return exit_code(reports)


def cmd_selftest(args) -> int:
    from .selftest import run_all

    outcomes = run_all(scale=args.scale, echo=print)
    failed = [o for o in outcomes if not o.passed]
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} criteria passed")
    return 0 if not failed else 1


def cmd_schema(args) -> int:
    print(json.dumps(SCHEMA, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arithcap", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate a scenario file (or - for stdin)")
    run.add_argument("path", nargs="?", default="-")
    run.add_argument("--tol", type=float, default=None, help="relative tolerance for pass/fail comparisons")
    run.add_argument("--with-oracle", action="store_true", help="attach brute-force cross-checks")
    run.add_argument("--format", choices=["json", "text"], default="json")
    run.add_argument("--jobs", type=int, default=1, help="evaluate scenarios on this many threads")
    run.set_defaults(func=cmd_run)

    st = sub.add_parser("selftest", help="run the randomized acceptance checks")
    st.add_argument("--scale", type=float, default=1.0, help="fraction of the full case counts")
    st.set_defaults(func=cmd_selftest)

    sc = sub.add_parser("schema", help="print the scenario JSON schema")
    sc.set_defaults(func=cmd_schema)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
