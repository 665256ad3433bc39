"""CLI for the acquisition scripts.

``cvikit-fetch real NAME...`` downloads named datasets (or ``all``) into
``data/real``; ``cvikit-fetch arff FILE...`` converts ARFF files; and
``cvikit-fetch pin`` prints sha256 checksums of cached raw files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .arff import convert_arff
from .exceptions import FetchToolError
from .fetch import DATASET_NAMES, fetch_real, pin_checksums


def _cmd_real(args) -> int:
    names = DATASET_NAMES if "all" in args.names else tuple(args.names)
    failures = 0
    for name in names:
        try:
            path = fetch_real(name, out_dir=args.out, cache_dir=args.cache)
            print(f"{name}: wrote {path}")
        except FetchToolError as exc:
            failures += 1
            print(f"{name}: error[{exc.code}]: {exc}", file=sys.stderr)
    return 1 if failures else 0


def _cmd_arff(args) -> int:
    for source in args.files:
        out = Path(args.out) / (Path(source).stem + ".csv") if args.out else None
        path = convert_arff(source, out)
        print(f"{source}: wrote {path}")
    return 0


def _cmd_pin(args) -> int:
    for filename, digest in sorted(pin_checksums(args.cache).items()):
        print(f"{filename}  {digest}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="cvikit-fetch",
                                     description="Fetch benchmark datasets as canonical CSV.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("real", help="download real datasets by name (or 'all')")
    p.add_argument("names", nargs="+", choices=(*DATASET_NAMES, "all"))
    p.add_argument("--out", default="data/real")
    p.add_argument("--cache", default="data/_cache")
    p.set_defaults(func=_cmd_real)

    p = sub.add_parser("arff", help="convert ARFF files to canonical CSV")
    p.add_argument("files", nargs="+")
    p.add_argument("--out", help="output directory (default: next to each input)")
    p.set_defaults(func=_cmd_arff)

    p = sub.add_parser("pin", help="print sha256 of cached raw files")
    p.add_argument("--cache", default="data/_cache")
    p.set_defaults(func=_cmd_pin)

    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except FetchToolError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
