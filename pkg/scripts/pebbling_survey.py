"""Exact pebbling numbers for weighted cubes and divisor lattices.

Tabulates pi(G) for weighted boolean cubes against the product of the edge
weights, and pi(L(G)) for small abelian groups against |G|. Both columns are
conjectured equal in general; here they are checked exhaustively.
"""

from __future__ import annotations

import argparse
import time
from itertools import product

from zerosum import (
    lattice_graph,
    parse_group_spec,
    pebbling_number,
    primary_decomposition,
    weighted_boolean_cube,
)


def survey_cubes(max_dim: int, weights: tuple[int, ...]) -> None:
    print(f"{'cube weights':>14} {'pi':>5} {'product':>8} {'witness':>24} {'secs':>7}")
    for dim in range(1, max_dim + 1):
        for ws in product(weights, repeat=dim):
            expect = 1
            for w in ws:
                expect *= w
            started = time.perf_counter()
            result = pebbling_number(weighted_boolean_cube(ws))
            secs = time.perf_counter() - started
            mark = "" if result.number == expect else "  <-- MISMATCH"
            print(
                f"{str(ws):>14} {result.number:>5} {expect:>8} "
                f"{str(result.witness):>24} {secs:>7.2f}{mark}"
            )


def survey_lattices(groups: list[str]) -> None:
    print(f"{'group':>8} {'|G|':>5} {'pi(L(G))':>9} {'secs':>7}")
    for text in groups:
        dec = primary_decomposition(parse_group_spec(text))
        started = time.perf_counter()
        result = pebbling_number(lattice_graph(dec))
        secs = time.perf_counter() - started
        mark = "" if result.number == dec.group_order else "  <-- MISMATCH"
        print(f"{text:>8} {dec.group_order:>5} {result.number:>9} {secs:>7.2f}{mark}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=2)
    ap.add_argument("--cube-weights", type=int, nargs="*", default=[2, 3, 4])
    ap.add_argument(
        "--groups", nargs="*", default=["2", "3", "4", "2,2", "5", "6", "7", "8", "2,2,2", "4,2", "9", "3,3", "12"]
    )
    args = ap.parse_args()

    survey_cubes(args.max_dim, tuple(args.cube_weights))
    print()
    survey_lattices(args.groups)


if __name__ == "__main__":
    main()
