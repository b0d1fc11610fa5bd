"""Randomized solver battery across a panel of groups, with fallback stats.

Runs the same seeded generator as `zerosum stress` but prints a compact table:
trials, verified certificates, how often the complete search had to take over
from the greedy planner, and wall time per group.
"""

from __future__ import annotations

import argparse
import time

from zerosum import (
    build_lattice,
    extract_certificate,
    initial_configuration,
    parse_group_spec,
    primary_decomposition,
    solve_to_root,
    to_primary_coordinates,
    verify_certificate,
)
from zerosum.cli import SplitMix64

DEFAULT_GROUPS = ["12", "8", "2,2,2", "9,3", "4,2", "6,2", "16", "3,3", "8,2", "5,5"]


def run_group(text: str, trials: int, seed: int) -> tuple[int, int, float]:
    spec = parse_group_spec(text)
    dec = primary_decomposition(spec)
    lattice = build_lattice(dec)
    rng = SplitMix64(seed)
    fallbacks = 0
    verified = 0
    started = time.perf_counter()
    for _ in range(trials):
        els = [
            to_primary_coordinates(tuple(rng.below(nf) for nf in spec.cyclic_orders), dec)
            for _ in range(dec.group_order)
        ]
        conf = initial_configuration(dec, els, lattice=lattice)
        root = solve_to_root(conf)
        cert = extract_certificate(root, dec, els)
        if verify_certificate(dec, els, cert.indices).passed:
            verified += 1
        if conf.fallback_fired:
            fallbacks += 1
    return verified, fallbacks, time.perf_counter() - started


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--groups", nargs="*", default=DEFAULT_GROUPS)
    args = ap.parse_args()

    print(f"{'group':>8} {'trials':>7} {'verified':>9} {'fallbacks':>10} {'secs':>7}")
    for text in args.groups:
        verified, fallbacks, secs = run_group(text, args.trials, args.seed)
        print(f"{text:>8} {args.trials:>7} {verified:>9} {fallbacks:>10} {secs:>7.2f}")


if __name__ == "__main__":
    main()
