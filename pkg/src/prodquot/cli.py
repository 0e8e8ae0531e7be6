"""Command-line entry point ``pqclassify``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import pipeline
from .groups import catalogue


def _orders(text: str) -> frozenset[int]:
    return frozenset(int(x) for x in text.replace(",", " ").split())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pqclassify",
        description="Classify product-quotient surfaces with p_g = 0 for a given K^2.")
    p.add_argument("--k2", type=int, choices=range(1, 9), metavar="N",
                   help="self-intersection of the canonical class, 1..8")
    p.add_argument("--catalogue", metavar="PATH",
                   help="group catalogue file or directory (default: shipped catalogue or $PRODQUOT_CATALOGUE)")
    p.add_argument("--max-order", type=int, default=pipeline.MAX_ORDER, metavar="M")
    p.add_argument("--skip-orders", type=_orders, default=pipeline.DEFAULT_SKIP_ORDERS, metavar="LIST",
                   help="comma-separated group orders to skip")
    p.add_argument("--groups", metavar="LIST", help="comma-separated allowlist of catalogue names")
    p.add_argument("--no-h1", action="store_true", help="do not compute H1")
    p.add_argument("--emit", choices=("json", "csv"), default="json")
    p.add_argument("--no-timings", action="store_true", help="leave timings out of JSON output")
    p.add_argument("--fixtures", metavar="PATH",
                   help="verify the vector pairs in a JSON fixture file instead of sweeping")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("-o", "--output", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.fixtures:
            entries = json.loads(Path(args.fixtures).read_text())
            if args.k2 is not None:
                entries = [e for e in entries if e.get("k2") == args.k2]
            report = pipeline.verify_fixtures(entries, catalogue(args.catalogue), not args.no_h1)
        else:
            if args.k2 is None:
                print("pqclassify: --k2 is required unless --fixtures is given", file=sys.stderr)
                return 1
            cfg = pipeline.RunConfig(
                k2=args.k2,
                max_order=args.max_order,
                groups=tuple(x.strip() for x in args.groups.split(",")) if args.groups else None,
                skip_orders=args.skip_orders,
                compute_h1=not args.no_h1,
                catalogue_path=args.catalogue,
                jobs=args.jobs,
            )
            report = pipeline.classify(cfg)
        data = pipeline.emit_report(report, args.emit, timings=not args.no_timings)
    except Exception as exc:  # reported, not raised: the exit code carries the failure
        logging.getLogger("pqclassify").debug("failure", exc_info=True)
        print(f"pqclassify: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    if report.refusals:
        for r in report.refusals:
            print(f"pqclassify: refused: {r.get('reason')}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
