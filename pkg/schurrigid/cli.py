#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
import sys
from typing import List, Optional, Sequence

from schurrigid import APP_NAME
from schurrigid import __doc__ as description
from schurrigid import __version__
from schurrigid.core import Core
from schurrigid.errors import InputError, InvariantViolation

VERBS = (
    "roots",
    "weyl",
    "schubert",
    "bb-cells",
    "degenerate",
    "classify",
    "catalog",
    "verify",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=APP_NAME, description=description)
    parser.add_argument("verb", choices=VERBS, help="What to compute.")
    parser.add_argument(
        "targets",
        nargs="*",
        help="Types (G2), marked diagrams (F4:3) or addresses "
        "(F4:3 / sub=1,2).",
    )
    parser.add_argument(
        "--json", action="store_true", help="Print JSON instead of a table."
    )
    parser.add_argument("--w", help="Reduced word, e.g. '4 3 2 3'.")
    parser.add_argument("--sub", help="Subdiagram nodes, e.g. '1,2'.")
    parser.add_argument("--exc", help="Exceptional catalog tag.")
    parser.add_argument("--I", help="Levi subset for the torus, e.g. '2,3'.")
    parser.add_argument(
        "--lambda",
        dest="coweight",
        help="Cocharacter coefficients replacing the canonical one.",
    )
    parser.add_argument("--points", help="JSON points file for degenerate.")
    parser.add_argument(
        "--out", help="Write the limit points of degenerate to this file."
    )
    parser.add_argument(
        "--max-rank",
        type=int,
        default=6,
        help="Largest classical rank swept by verify without targets.",
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="Worker threads for verify."
    )
    parser.add_argument(
        "--cache-dir", help="Directory for cached Bruhat tables."
    )
    parser.add_argument(
        "--debug", action="store_true", help="Print debug messages to STDERR."
    )
    parser.add_argument(
        "-V", "--version", action="version", version="%(prog)s " + __version__
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return Core(args).start()
    except InputError as e:
        sys.stderr.write(f"{APP_NAME}: error: {e}\n")
        return 2
    except InvariantViolation as e:
        sys.stderr.write(f"{APP_NAME}: internal error: {e}\n")
        return 1


def run(argv: List[str]) -> int:
    return main(argv[1:])


if __name__ == "__main__":
    sys.exit(run(sys.argv))
