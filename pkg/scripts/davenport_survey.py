"""Davenport constants, plain and weighted, for small abelian groups.

Prints D(G) from the brute-force search next to the rank formula
1 + sum(d_k - 1) over the invariant factors, and the weighted variant D_w(G)
(shortest length guaranteeing a zero-sum subsequence with order cost <= N).
The formula column is known to match for p-groups and rank <= 2; mismatches
elsewhere would be the interesting rows.
"""

from __future__ import annotations

import argparse
import time

from zerosum import parse_group_spec, primary_decomposition
from zerosum.oracle import davenport_constant

DEFAULT_GROUPS = [
    "1", "2", "3", "4", "2,2", "5", "6", "7", "8", "4,2", "2,2,2", "9", "3,3", "10", "12",
]


def invariant_factors(dec) -> list[int]:
    """Invariant factor chain d_1 >= d_2 >= ..., d_{k+1} | d_k, from the primary rows."""
    depth = max((len(row) for row in dec.exponents), default=0)
    out = []
    for k in range(depth):
        d = 1
        for p, row in zip(dec.primes, dec.exponents):
            if k < len(row):
                d *= p ** row[k]
        out.append(d)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", nargs="*", default=DEFAULT_GROUPS)
    ap.add_argument("--skip-weighted", action="store_true", help="plain constants only")
    args = ap.parse_args()

    header = f"{'group':>8} {'|G|':>5} {'D(G)':>6} {'formula':>8}"
    if not args.skip_weighted:
        header += f" {'D_w(G)':>7}"
    header += f" {'secs':>7}"
    print(header)

    for text in args.groups:
        dec = primary_decomposition(parse_group_spec(text))
        formula = 1 + sum(d - 1 for d in invariant_factors(dec))
        started = time.perf_counter()
        plain = davenport_constant(dec)
        line = f"{text:>8} {dec.group_order:>5} {plain:>6} {formula:>8}"
        if not args.skip_weighted:
            weighted = davenport_constant(dec, weighted=True)
            line += f" {weighted:>7}"
        line += f" {time.perf_counter() - started:>7.2f}"
        if plain != formula:
            line += "  <-- differs from formula"
        print(line)


if __name__ == "__main__":
    main()
