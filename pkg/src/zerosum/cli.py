"""Command-line front end: solver, verifier, and oracles with stable JSON output.

Output contract: human-readable text by default, `--json` switches to a fixed
key order so identical invocations are byte-identical. Timing is text-only.
Exit codes: 0 pass, 1 infeasible or verification failure, 2 malformed input,
3 internal invariant violation (a bug, never an infeasible input).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from .engine import (
    extract_certificate,
    initial_configuration,
    solve_to_root,
    verify_certificate,
)
from .errors import (
    EXIT_FAIL,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_PASS,
    InputError,
    InternalInvariantError,
)
from .groups import (
    GroupElement,
    PrimaryDecomposition,
    parse_group_spec,
    primary_decomposition,
    to_primary_coordinates,
)
from .lattice import build_lattice
from .oracle import (
    davenport_constant,
    dp_min_cost_zero_sum,
    lattice_graph,
    path_graph,
    pebbling_number,
    solvable,
    weighted_boolean_cube,
)

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, and Flood's 2014 mixer).

    state = (state + 0x9E3779B97F4A7C15) mod 2^64, then the output is the
    state passed through two xor-shift multiplies:
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31.
    below(n) is next64() mod n; every call advances the state exactly once,
    so stress runs replay identically for a given seed across platforms.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n < 1:
            raise InputError(f"cannot draw below {n}")
        return self.next64() % n


@dataclass
class RunReport:
    """Everything one command run produced; timing stays out of the JSON."""

    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    exit_code: int
    lines: list[str] = field(default_factory=list)
    moves: list[dict] | None = None
    elapsed_ms: float = 0.0

    def json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        }
        if self.moves is not None:
            out["moves"] = self.moves
        out["exit_code"] = self.exit_code
        return out


def parse_raw_sequence(value: str, rank: int) -> list[list[int]]:
    """Element tuples from an inline string or a file named by `value`.

    Files hold one comma-separated tuple per line (blank lines skipped).
    Inline text separates elements with ';'; for rank-1 groups plain commas
    also work, since each element is a single integer.
    """
    if os.path.isfile(value):
        try:
            with open(value, encoding="utf-8") as fh:
                parts = [ln.strip() for ln in fh.read().splitlines()]
        except OSError as exc:
            raise InputError(f"cannot read sequence file {value!r}: {exc}") from None
        parts = [p for p in parts if p]
    else:
        s = value.strip()
        if not s:
            raise InputError("empty sequence")
        if ";" in s or rank > 1:
            parts = [p.strip() for p in s.split(";") if p.strip()]
        else:
            parts = [p.strip() for p in s.split(",") if p.strip()]
    if not parts:
        raise InputError("sequence has no elements")
    out = []
    for part in parts:
        toks = [t.strip() for t in part.split(",")]
        try:
            out.append([int(t) for t in toks])
        except ValueError:
            raise InputError(f"bad element {part!r} in sequence") from None
    return out


def parse_elements(value: str, dec: PrimaryDecomposition) -> tuple[list[list[int]], list[GroupElement]]:
    raw = parse_raw_sequence(value, dec.spec.rank)
    return raw, [to_primary_coordinates(tuple(r), dec) for r in raw]


def parse_indices(value: str) -> list[int]:
    toks = [t.strip() for t in value.split(",") if t.strip()]
    out = []
    for tok in toks:
        try:
            out.append(int(tok))
        except ValueError:
            raise InputError(f"bad index {tok!r}") from None
    return out


def _group_label(dec: PrimaryDecomposition) -> str:
    return "Z(" + ")+Z(".join(str(n) for n in dec.spec.cyclic_orders) + ")"


def _solve_sequence(dec: PrimaryDecomposition, elements, lattice=None):
    conf = initial_configuration(dec, elements, lattice=lattice)
    root = solve_to_root(conf)
    cert = extract_certificate(root, dec, elements, moves=conf.move_log)
    verdict = verify_certificate(dec, elements, cert.indices)
    if not verdict.passed:
        raise InternalInvariantError(
            "certificate failed independent verification: " + "; ".join(verdict.failures)
        )
    return conf, cert


def cmd_solve(args) -> RunReport:
    spec = parse_group_spec(args.group)
    dec = primary_decomposition(spec)
    raw, elements = parse_elements(args.seq, dec)
    conf, cert = _solve_sequence(dec, elements)
    results = {
        "group_order": dec.group_order,
        "exponent": dec.exponent,
        "indices": list(cert.indices),
        "sum_is_zero": cert.sum_is_zero,
        "ord_cost": cert.ord_cost,
        "bound": cert.bound,
        "length_bound_ok": cert.length_bound_ok,
        "moves_applied": len(conf.move_log),
        "fallback_fired": conf.fallback_fired,
        "verified": True,
    }
    report = RunReport(
        command="solve",
        inputs={"group": args.group, "sequence": raw},
        results=results,
        exit_code=EXIT_PASS,
    )
    report.lines = [
        f"group {_group_label(dec)}: |G|={dec.group_order}, N={dec.exponent}",
        f"K = {list(cert.indices)}",
        "sum over K: identity",
        f"order cost: {cert.ord_cost}/{cert.bound} (reciprocal sum <= 1)",
        f"moves applied: {len(conf.move_log)}, fallback fired: {_yesno(conf.fallback_fired)}",
        "verify: PASS",
    ]
    if args.trace:
        report.moves = [m.json_dict() for m in conf.move_log]
        report.lines.extend(_trace_lines(conf.move_log))
    return report


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _trace_lines(move_log) -> list[str]:
    out = ["trace:"]
    for m in move_log:
        out.append(
            f"  at divisor {m.vertex_divisor}: consume {len(m.consumed)} pebbles "
            f"{list(m.consumed)} (weight {m.weight}, prime {m.prime}), "
            f"keep {list(m.selected)} -> pebble {m.new_id}"
        )
    return out


def cmd_solve_cyclic(args) -> RunReport:
    if args.n < 1:
        raise InputError(f"modulus must be positive, got {args.n}")
    spec = parse_group_spec(str(args.n))
    dec = primary_decomposition(spec)
    raw = parse_raw_sequence(args.seq, rank=1)
    for r in raw:
        if len(r) != 1:
            raise InputError(f"cyclic sequence elements are single integers, got {r}")
    integers = [r[0] for r in raw]
    elements = [to_primary_coordinates((a,), dec) for a in integers]
    conf, cert = _solve_sequence(dec, elements)
    gcd_terms = [math.gcd(integers[k - 1], args.n) for k in cert.indices]
    if sum(gcd_terms) != cert.ord_cost:
        raise InternalInvariantError("gcd form disagrees with the order-cost form")
    residue_sum = sum(integers[k - 1] for k in cert.indices) % args.n
    if residue_sum:
        raise InternalInvariantError("certificate indices do not sum to 0 mod n")
    results = {
        "n": args.n,
        "indices": list(cert.indices),
        "residue_sum_mod_n": residue_sum,
        "gcd_terms": gcd_terms,
        "gcd_sum": sum(gcd_terms),
        "bound": args.n,
        "moves_applied": len(conf.move_log),
        "fallback_fired": conf.fallback_fired,
        "verified": True,
    }
    report = RunReport(
        command="solve-cyclic",
        inputs={"n": args.n, "sequence": integers},
        results=results,
        exit_code=EXIT_PASS,
    )
    report.lines = [
        f"group Z({args.n})",
        f"K = {list(cert.indices)}",
        f"sum over K: 0 (mod {args.n})",
        f"gcd terms: {gcd_terms}, sum {sum(gcd_terms)} <= {args.n}",
        "verify: PASS",
    ]
    if args.trace:
        report.moves = [m.json_dict() for m in conf.move_log]
        report.lines.extend(_trace_lines(conf.move_log))
    return report


def cmd_verify(args) -> RunReport:
    spec = parse_group_spec(args.group)
    dec = primary_decomposition(spec)
    raw, elements = parse_elements(args.seq, dec)
    indices = parse_indices(args.indices)
    verdict = verify_certificate(dec, elements, indices)
    results = {
        "indices": indices,
        "passed": verdict.passed,
        "failures": list(verdict.failures),
    }
    report = RunReport(
        command="verify",
        inputs={"group": args.group, "sequence": raw, "indices": indices},
        results=results,
        exit_code=EXIT_PASS if verdict.passed else EXIT_FAIL,
    )
    report.lines = [f"K = {indices}", f"verify: {'PASS' if verdict.passed else 'FAIL'}"]
    report.lines.extend(f"  {f}" for f in verdict.failures)
    return report


def cmd_oracle(args) -> RunReport:
    spec = parse_group_spec(args.group)
    dec = primary_decomposition(spec)
    raw, elements = parse_elements(args.seq, dec)
    result = dp_min_cost_zero_sum(dec, elements)
    results = {
        "feasible": result.feasible,
        "min_cost": result.min_cost,
        "witness": list(result.indices),
        "qualifies": result.qualifies,
        "bound": dec.exponent,
    }
    report = RunReport(
        command="oracle",
        inputs={"group": args.group, "sequence": raw},
        results=results,
        exit_code=EXIT_PASS if result.feasible else EXIT_FAIL,
    )
    if result.feasible:
        report.lines = [
            f"min order cost: {result.min_cost}/{dec.exponent}",
            f"witness K = {list(result.indices)}",
            f"qualifies (cost <= {dec.exponent}): {_yesno(result.qualifies)}",
        ]
    else:
        report.lines = ["infeasible: no nonempty zero-sum subsequence"]
    return report


def parse_graph_argument(text: str):
    kind, sep, rest = text.partition(":")
    if not sep or not rest.strip():
        raise InputError(f"graph spec {text!r} is not kind:args")
    if kind == "cube":
        return weighted_boolean_cube(_parse_weights(rest))
    if kind == "path":
        return path_graph(_parse_weights(rest))
    if kind == "lattice":
        return lattice_graph(primary_decomposition(parse_group_spec(rest)))
    raise InputError(f"unknown graph kind {kind!r}; use cube:, path:, or lattice:")


def _parse_weights(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        try:
            out.append(int(tok.strip()))
        except ValueError:
            raise InputError(f"bad weight {tok!r} in graph spec") from None
    return out


def cmd_pebbling_number(args) -> RunReport:
    graph = parse_graph_argument(args.graph)
    result = pebbling_number(graph)
    if solvable(graph, result.witness, result.witness_target):
        raise InternalInvariantError("pebbling witness is solvable; scan is broken")
    results = {
        "graph": graph.name,
        "vertices": graph.num_vertices,
        "edges": len(graph.edges),
        "pebbling_number": result.number,
        "witness_distribution": list(result.witness),
        "witness_target": result.witness_target,
        "witness_unsolvable": True,
    }
    report = RunReport(
        command="pebbling-number",
        inputs={"graph": args.graph},
        results=results,
        exit_code=EXIT_PASS,
    )
    report.lines = [
        f"graph {graph.name}: {graph.num_vertices} vertices, {len(graph.edges)} edges",
        f"pebbling number: {result.number}",
        f"witness: {list(result.witness)} cannot reach vertex {result.witness_target}",
    ]
    return report


def cmd_stress(args) -> RunReport:
    if args.trials < 0:
        raise InputError(f"trial count must be nonnegative, got {args.trials}")
    spec = parse_group_spec(args.group)
    dec = primary_decomposition(spec)
    lattice = build_lattice(dec)
    rng = SplitMix64(args.seed)
    failures: list[str] = []
    fallback_count = 0
    total_moves = 0
    oracle_checked = 0
    oracle_budget = max(0, args.oracle_limit)
    for trial in range(args.trials):
        elements = [
            to_primary_coordinates(
                tuple(rng.below(nf) for nf in spec.cyclic_orders), dec
            )
            for _ in range(dec.group_order)
        ]
        conf, cert = _solve_sequence(dec, elements, lattice=lattice)
        fallback_count += 1 if conf.fallback_fired else 0
        total_moves += len(conf.move_log)
        if trial < oracle_budget:
            oracle = dp_min_cost_zero_sum(dec, elements)
            oracle_checked += 1
            if not oracle.feasible or not oracle.qualifies:
                failures.append(f"trial {trial}: oracle found no qualifying subsequence")
            elif cert.ord_cost < oracle.min_cost:
                failures.append(
                    f"trial {trial}: certificate cost {cert.ord_cost} "
                    f"below the oracle minimum {oracle.min_cost}"
                )
    results = {
        "trials": args.trials,
        "passed": args.trials - len(failures),
        "failed": len(failures),
        "failures": failures[:10],
        "oracle_checked": oracle_checked,
        "fallback_fired": fallback_count,
        "total_moves": total_moves,
    }
    report = RunReport(
        command="stress",
        inputs={
            "group": args.group,
            "trials": args.trials,
            "seed": args.seed,
            "oracle_limit": args.oracle_limit,
        },
        results=results,
        exit_code=EXIT_PASS if not failures else EXIT_FAIL,
    )
    report.lines = [
        f"group {_group_label(dec)}: {args.trials} trials, seed {args.seed}",
        f"passed {results['passed']}/{args.trials}, oracle cross-checked {oracle_checked}",
        f"fallback fired in {fallback_count} trials, {total_moves} moves total",
    ]
    report.lines.extend(f"  {f}" for f in failures[:10])
    return report


def cmd_davenport(args) -> RunReport:
    spec = parse_group_spec(args.group)
    dec = primary_decomposition(spec)
    value = davenport_constant(dec, weighted=args.weighted)
    results = {
        "group_order": dec.group_order,
        "weighted": args.weighted,
        "davenport": value,
    }
    report = RunReport(
        command="davenport",
        inputs={"group": args.group, "weighted": args.weighted},
        results=results,
        exit_code=EXIT_PASS,
    )
    kind = "weighted Davenport constant" if args.weighted else "Davenport constant"
    report.lines = [f"group {_group_label(dec)}: {kind} = {value}"]
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerosum",
        description="Zero-sum subsequences with bounded order-reciprocal sum, "
        "by pebbling the divisor lattice; plus brute-force oracles.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("solve", help="find and verify a bounded zero-sum subsequence")
    p.add_argument("--group", required=True, help="cyclic factor orders, e.g. 9,3")
    p.add_argument("--seq", required=True, help="inline elements or a file path")
    p.add_argument("--trace", action="store_true", help="include the move log")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("solve-cyclic", help="integer form over Z_n with gcd costs")
    p.add_argument("--n", required=True, type=int, help="modulus")
    p.add_argument("--seq", required=True, help="n integers, inline or a file path")
    p.add_argument("--trace", action="store_true", help="include the move log")
    common(p)
    p.set_defaults(func=cmd_solve_cyclic)

    p = sub.add_parser("verify", help="check a claimed index set independently")
    p.add_argument("--group", required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--indices", required=True, help="1-based, comma separated")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact minimum order cost by dynamic programming")
    p.add_argument("--group", required=True)
    p.add_argument("--seq", required=True, help="any length, inline or a file path")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("pebbling-number", help="exact pebbling number of a small graph")
    p.add_argument("--graph", required=True, help='"cube:w1,..", "path:w1,..", or "lattice:SPEC"')
    common(p)
    p.set_defaults(func=cmd_pebbling_number)

    p = sub.add_parser("stress", help="randomized solve/verify/oracle battery")
    p.add_argument("--group", required=True)
    p.add_argument("--trials", required=True, type=int)
    p.add_argument("--seed", type=int, default=0, help="SplitMix64 seed")
    p.add_argument(
        "--oracle-limit",
        type=int,
        default=50,
        help="cross-check at most this many leading trials against the DP oracle",
    )
    common(p)
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("davenport", help="Davenport constant by multiset search")
    p.add_argument("--group", required=True)
    p.add_argument("--weighted", action="store_true", help="require cost within the budget")
    common(p)
    p.set_defaults(func=cmd_davenport)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return EXIT_PASS
        return EXIT_INPUT_ERROR
    started = time.perf_counter()
    try:
        report = args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    if args.json:
        print(json.dumps(report.json_dict(), indent=2))
    else:
        for line in report.lines:
            print(line)
        print(f"elapsed {report.elapsed_ms:.1f} ms")
    return report.exit_code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
