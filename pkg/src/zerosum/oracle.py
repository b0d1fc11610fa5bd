"""Brute-force ground truth, independent of the lattice engine.

Three families: a subset DP computing the exact minimum order cost over all
nonempty zero-sum subsequences, exhaustive generalized pebbling numbers for
small weighted graphs, and Davenport-type constants by multiset search. All
arithmetic is exact; every bound breach raises instead of approximating.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import InputError, InternalInvariantError
from .groups import (
    GroupElement,
    PrimaryDecomposition,
    add_elements,
    element_from_index,
    element_index,
    order_cost,
)
from .lattice import build_lattice

MAX_DP_STATES = 5_000_000
MAX_SOLVABLE_STATES = 2_000_000
MAX_PEBBLING_TOTAL = 64
DAVENPORT_PLAIN_MAX = 16
DAVENPORT_WEIGHTED_MAX = 12

# A pebble distribution is a count per vertex, indexed like the graph.
PebbleDistribution = tuple[int, ...]


@dataclass(frozen=True)
class WeightedGraph:
    """Connected undirected graph; moving across an edge burns its weight in pebbles."""

    num_vertices: int
    edges: tuple[tuple[int, int, int], ...]
    name: str = "graph"

    def __post_init__(self):
        if self.num_vertices < 1:
            raise InputError("graph needs at least one vertex")
        seen = set()
        for a, b, w in self.edges:
            if not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
                raise InputError(f"edge ({a},{b}) endpoint out of range")
            if a == b:
                raise InputError(f"self-loop at vertex {a}")
            if w < 2:
                raise InputError(f"edge ({a},{b}) weight {w} below 2")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise InputError(f"duplicate edge ({a},{b})")
            seen.add(key)
        reached = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for a, b, _ in self.edges:
                for x, y in ((a, b), (b, a)):
                    if x == v and y not in reached:
                        reached.add(y)
                        frontier.append(y)
        if len(reached) != self.num_vertices:
            raise InputError("graph is not connected")


@functools.lru_cache(maxsize=None)
def _adjacency(graph: WeightedGraph) -> tuple[tuple[tuple[int, int], ...], ...]:
    out: list[list[tuple[int, int]]] = [[] for _ in range(graph.num_vertices)]
    for a, b, w in graph.edges:
        out[a].append((b, w))
        out[b].append((a, w))
    return tuple(tuple(sorted(nbrs)) for nbrs in out)


def weighted_boolean_cube(weights: tuple[int, ...] | list[int]) -> WeightedGraph:
    """2^n vertices as bitmasks; flipping bit i costs weights[i]."""
    weights = tuple(int(w) for w in weights)
    if not weights:
        raise InputError("cube needs at least one weight")
    n = len(weights)
    edges = []
    for mask in range(1 << n):
        for i in range(n):
            if not mask & (1 << i):
                edges.append((mask, mask | (1 << i), weights[i]))
    return WeightedGraph(1 << n, tuple(edges), name="cube:" + ",".join(map(str, weights)))


def path_graph(weights: tuple[int, ...] | list[int]) -> WeightedGraph:
    """len(weights)+1 vertices in a line; vertex 0 is the root end."""
    weights = tuple(int(w) for w in weights)
    if not weights:
        raise InputError("path needs at least one weight")
    edges = tuple((i, i + 1, w) for i, w in enumerate(weights))
    return WeightedGraph(len(weights) + 1, edges, name="path:" + ",".join(map(str, weights)))


def lattice_graph(dec: PrimaryDecomposition) -> WeightedGraph:
    """The divisor lattice as a plain weighted graph, vertex 0 the root."""
    lattice = build_lattice(dec)
    edges = []
    for vidx in range(lattice.num_vertices):
        for _, w, child_idx in lattice.moves[vidx]:
            edges.append((vidx, child_idx, w))
    if not edges:
        return WeightedGraph(1, (), name=f"lattice:{dec.exponent}")
    return WeightedGraph(lattice.num_vertices, tuple(edges), name=f"lattice:{dec.exponent}")


class _SolvableMemo:
    """Solvability cache for one (graph, target) pair, shared across queries."""

    def __init__(self):
        self.solved: set[PebbleDistribution] = set()
        self.failed: set[PebbleDistribution] = set()


def solvable(
    graph: WeightedGraph,
    dist: PebbleDistribution,
    target: int,
    _memo: _SolvableMemo | None = None,
) -> bool:
    """True iff some move sequence puts a pebble on target."""
    dist = tuple(int(c) for c in dist)
    if len(dist) != graph.num_vertices:
        raise InputError(f"distribution has {len(dist)} entries for {graph.num_vertices} vertices")
    if any(c < 0 for c in dist):
        raise InputError("pebble counts must be nonnegative")
    if not 0 <= target < graph.num_vertices:
        raise InputError(f"target {target} out of range")
    if dist[target] >= 1:
        return True
    adj = _adjacency(graph)
    memo = _memo if _memo is not None else _SolvableMemo()
    budget = [MAX_SOLVABLE_STATES]

    def search(state: PebbleDistribution) -> bool:
        if state in memo.solved:
            return True
        if state in memo.failed:
            return False
        budget[0] -= 1
        if budget[0] < 0:
            raise InternalInvariantError("solvability search exceeded its state budget")
        for v in range(graph.num_vertices):
            if state[v] == 0:
                continue
            for u, w in adj[v]:
                if state[v] >= w:
                    nxt = list(state)
                    nxt[v] -= w
                    nxt[u] += 1
                    nxt_t = tuple(nxt)
                    if nxt_t[target] >= 1 or search(nxt_t):
                        memo.solved.add(state)
                        return True
        memo.failed.add(state)
        return False

    return search(dist)


def _compositions(total: int, parts: int):
    """All nonnegative integer tuples of the given length summing to total, concentrated first."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class PebblingResult:
    number: int
    witness: PebbleDistribution
    witness_target: int


def pebbling_number(graph: WeightedGraph, max_total: int = MAX_PEBBLING_TOTAL) -> PebblingResult:
    """Least k such that every k-pebble distribution reaches every target.

    Solvability is monotone in pebbles, so the first k with no failing pair is
    the answer; the witness is an unsolvable (k-1)-pebble distribution. Scans
    every distribution by stars and bars, stopping at the first failure.
    """
    memos = {t: _SolvableMemo() for t in range(graph.num_vertices)}
    witness: tuple[PebbleDistribution, int] = ((0,) * graph.num_vertices, 0)
    for k in range(1, max_total + 1):
        bad = None
        for dist in _compositions(k, graph.num_vertices):
            for target in range(graph.num_vertices):
                if dist[target] >= 1:
                    continue
                if not solvable(graph, dist, target, _memo=memos[target]):
                    bad = (dist, target)
                    break
            if bad is not None:
                break
        if bad is None:
            return PebblingResult(k, witness[0], witness[1])
        witness = bad
    raise InternalInvariantError(f"pebbling number exceeds the scan bound {max_total}")


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    min_cost: int | None
    indices: tuple[int, ...]
    qualifies: bool


def _index_add_table(dec: PrimaryDecomposition, g: GroupElement) -> list[int]:
    return [
        element_index(add_elements(element_from_index(dec, s), g))
        for s in range(dec.group_order)
    ]


def dp_min_cost_zero_sum(dec: PrimaryDecomposition, elements) -> OracleResult:
    """Exact minimum of the order cost over nonempty zero-sum subsequences.

    Forward 0/1 DP over (group element, exact cost) states; the parent pointer
    recorded at a state's first creation makes the witness reproducible. Items
    are considered in index order, so parent chains carry strictly decreasing
    indices and each item is used at most once.
    """
    elements = list(elements)
    for g in elements:
        if g.dec != dec:
            raise InputError("sequence element belongs to a different decomposition")
    zero = 0
    states: dict[tuple[int, int], tuple[int | None, int | None, int]] = {}
    tables: dict[int, list[int]] = {}
    for k, g in enumerate(elements, start=1):
        gi = element_index(g)
        if gi not in tables:
            tables[gi] = _index_add_table(dec, g)
        table = tables[gi]
        c = order_cost(g)
        additions: dict[tuple[int, int], tuple[int | None, int | None, int]] = {}
        key = (gi, c)
        if key not in states:
            additions[key] = (None, None, k)
        for (s, cost) in list(states.keys()):
            nkey = (table[s], cost + c)
            if nkey not in states and nkey not in additions:
                additions[nkey] = (s, cost, k)
        states.update(additions)
        if len(states) > MAX_DP_STATES:
            raise InternalInvariantError("zero-sum DP exceeded its state budget")
    costs = [cost for (s, cost) in states if s == zero]
    if not costs:
        return OracleResult(False, None, (), False)
    best = min(costs)
    out = []
    s, cost = zero, best
    while True:
        ps, pc, k = states[(s, cost)]
        out.append(k)
        if ps is None:
            break
        s, cost = ps, pc
    out.sort()
    return OracleResult(True, best, tuple(out), best <= dec.exponent)


def davenport_constant(dec: PrimaryDecomposition, weighted: bool = False) -> int:
    """Least D such that every length-D sequence has a nonempty zero-sum subsequence.

    The weighted variant additionally requires the subsequence's order cost to
    fit the budget N. Computed as one plus the longest extendable sequence with
    no such subsequence; candidates are multisets (feasibility is permutation
    invariant), walked depth-first with reachable-sum sets carried along.
    """
    order = dec.group_order
    cap = DAVENPORT_WEIGHTED_MAX if weighted else DAVENPORT_PLAIN_MAX
    if order > cap:
        raise InputError(f"group order {order} above the enumeration bound {cap}")
    bound = dec.exponent
    costs = [order_cost(element_from_index(dec, i)) for i in range(order)]
    tables = [_index_add_table(dec, element_from_index(dec, i)) for i in range(order)]
    best = 0

    def extend_plain(lo: int, reach: frozenset[int], depth: int) -> None:
        nonlocal best
        best = max(best, depth)
        if depth >= order:
            raise InternalInvariantError("zero-sum-free sequence reached the group order")
        for g in range(lo, order):
            table = tables[g]
            new = {g} | {table[s] for s in reach}
            if 0 in new:
                continue
            extend_plain(g, reach | new, depth + 1)

    def extend_weighted(lo: int, reach: frozenset[tuple[int, int]], depth: int) -> None:
        nonlocal best
        best = max(best, depth)
        if depth >= order:
            raise InternalInvariantError("budget-free sequence reached the group order")
        for g in range(lo, order):
            table = tables[g]
            c = costs[g]
            new = set()
            if c <= bound:
                new.add((g, c))
            for (s, sc) in reach:
                if sc + c <= bound:
                    new.add((table[s], sc + c))
            if any(s == 0 for (s, _) in new):
                continue
            extend_weighted(g, reach | new, depth + 1)

    if weighted:
        extend_weighted(1, frozenset(), 0)
    else:
        extend_plain(1, frozenset(), 0)
    return best + 1
