"""Pebble merging on the weighted divisor lattice.

Each input element starts as a singleton pebble on the vertex named by its
order. A move at vertex u in coordinate i consumes exactly the edge weight in
pebbles, reduces their values to vectors over F_p, and keeps the zero-sum
selection found by the base cases; the merged pebble lands one level down and
stays well placed: its value is divisible by the residual moduli there and its
order cost stays within the integer budget N / divisor. A pebble reaching the
root is a certificate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, InternalInvariantError
from .groups import (
    GroupElement,
    PrimaryDecomposition,
    add_elements,
    element_order,
    identity,
    order_cost,
)
from .lattice import LatticeVertex, WeightedLattice, build_lattice, vertex_of_order
from .base_cases import elementary_zero_sum
from .partitions import residual_exponents

# Cap on distinct count profiles the fallback search may visit.
MAX_SEARCH_NODES = 2_000_000


@dataclass(frozen=True)
class Pebble:
    """A merge-tree leaf set with cached value, order cost, and position."""

    pid: int
    members: frozenset[int]
    val: GroupElement
    ord_cost: int
    vertex: LatticeVertex


@dataclass(frozen=True)
class MoveRecord:
    vertex_divisor: int
    prime: int
    coordinate: int
    weight: int
    consumed: tuple[int, ...]
    selected: tuple[int, ...]
    new_id: int

    def json_dict(self) -> dict:
        return {
            "vertex_divisor": self.vertex_divisor,
            "prime": self.prime,
            "weight": self.weight,
            "consumed": list(self.consumed),
            "selected": list(self.selected),
            "new_id": self.new_id,
        }


@dataclass(frozen=True)
class Verdict:
    passed: bool
    failures: tuple[str, ...]


@dataclass(frozen=True)
class Certificate:
    """Verified solution: indices whose elements sum to the identity within budget."""

    indices: tuple[int, ...]
    sum_is_zero: bool
    ord_cost: int
    bound: int
    length_bound_ok: bool
    moves: tuple[MoveRecord, ...] = ()

    def json_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "sum_is_zero": self.sum_is_zero,
            "ord_cost": self.ord_cost,
            "bound": self.bound,
            "length_bound_ok": self.length_bound_ok,
        }


def well_placed(val: GroupElement, cost: int, u: Sequence[int], dec: PrimaryDecomposition) -> bool:
    """Congruence against the residual moduli at u plus the integer cost budget."""
    residual = residual_exponents(dec.exponents, u)
    for p, row_val, row_res in zip(dec.primes, val.coords, residual):
        for x, e in zip(row_val, row_res):
            if x % p**e:
                return False
    divisor = 1
    for p, ui in zip(dec.primes, u):
        divisor *= p**ui
    return cost <= dec.exponent // divisor


class Configuration:
    """Live pebbles grouped by vertex, plus the move log of one solving session.

    Mutated only through merge moves; not meant to be shared across sessions.
    With debug enabled (flag or ZEROSUM_DEBUG=1) every move recomputes the new
    pebble's value and cost from its member indices and re-checks disjointness.
    """

    def __init__(
        self,
        dec: PrimaryDecomposition,
        lattice: WeightedLattice,
        elements: Sequence[GroupElement],
        debug: bool | None = None,
    ):
        self.dec = dec
        self.lattice = lattice
        self.elements = list(elements)
        self.debug = debug if debug is not None else os.environ.get("ZEROSUM_DEBUG") == "1"
        self.pebbles_at: dict[int, list[Pebble]] = {}
        self.move_log: list[MoveRecord] = []
        self.fallback_fired = False
        self._next_id = 1

    def place(self, pebble: Pebble) -> None:
        idx = self.lattice.vertex_index(pebble.vertex.u)
        self.pebbles_at.setdefault(idx, []).append(pebble)

    def live_pebbles(self) -> list[Pebble]:
        out = []
        for pool in self.pebbles_at.values():
            out.extend(pool)
        out.sort(key=lambda a: a.pid)
        return out

    def count_profile(self) -> tuple[int, ...]:
        counts = [0] * self.lattice.num_vertices
        for idx, pool in self.pebbles_at.items():
            counts[idx] = len(pool)
        return tuple(counts)

    def root_pebble(self) -> Pebble | None:
        pool = self.pebbles_at.get(self.lattice.root_index)
        if not pool:
            return None
        return min(pool, key=lambda a: a.pid)


def initial_configuration(
    dec: PrimaryDecomposition,
    elements: Sequence[GroupElement],
    lattice: WeightedLattice | None = None,
    debug: bool | None = None,
) -> Configuration:
    """One singleton pebble per element, each on the vertex of its order."""
    if len(elements) != dec.group_order:
        raise InputError(
            f"need exactly {dec.group_order} elements for this group, got {len(elements)}"
        )
    for g in elements:
        if g.dec != dec:
            raise InputError("sequence element belongs to a different decomposition")
    if lattice is None:
        lattice = build_lattice(dec)
    conf = Configuration(dec, lattice, elements, debug=debug)
    for k, g in enumerate(elements, start=1):
        vertex = vertex_of_order(element_order(g), dec)
        pebble = Pebble(k, frozenset([k]), g, order_cost(g), vertex)
        if not _well_placed_fast(conf, pebble.val, pebble.ord_cost, lattice.vertex_index(vertex.u)):
            raise InternalInvariantError(f"initial pebble {k} is not well placed")
        conf.place(pebble)
    conf._next_id = len(elements) + 1
    return conf


def _well_placed_fast(conf: Configuration, val: GroupElement, cost: int, vertex_idx: int) -> bool:
    moduli = conf.lattice.residual_moduli[vertex_idx]
    for row_val, row_mod in zip(val.coords, moduli):
        for x, m in zip(row_val, row_mod):
            if x % m:
                return False
    return cost <= conf.dec.exponent // conf.lattice.vertices[vertex_idx].divisor


def merge_step(conf: Configuration, vertex: LatticeVertex, coordinate: int) -> Configuration:
    """Consume one edge weight of pebbles at `vertex` and place the zero-sum merge one level down.

    The consumed pebbles are the lowest ids present. Each is reduced to a vector
    over F_p by dividing the coordinate-i components by the residual moduli at
    `vertex` (exact by well-placedness) and truncating to the edge's dual length;
    the base-case selection is kept, the rest are discarded.
    """
    lattice = conf.lattice
    dec = conf.dec
    u = vertex.u
    i = coordinate
    if not 0 <= i < dec.num_primes or u[i] < 1:
        raise InputError(f"vertex {vertex.divisor} has no down edge in coordinate {i}")
    vidx = lattice.vertex_index(u)
    pool = conf.pebbles_at.get(vidx, [])
    p = dec.primes[i]
    dims = lattice.duals[i][u[i] - 1]
    weight = p**dims
    if len(pool) < weight:
        raise InputError(
            f"vertex {vertex.divisor} holds {len(pool)} pebbles, the move needs {weight}"
        )

    consumed = pool[:weight]
    res_moduli = lattice.residual_moduli[vidx][i]
    reduced = []
    for peb in consumed:
        row = peb.val.coords[i]
        vec = []
        for j in range(dims):
            m = res_moduli[j]
            if row[j] % m:
                raise InternalInvariantError(
                    f"pebble {peb.pid} is not well placed at vertex {vertex.divisor}"
                )
            vec.append((row[j] // m) % p)
        reduced.append(tuple(vec))

    selected_pos = elementary_zero_sum(p, dims, reduced)
    selected = [consumed[pos - 1] for pos in selected_pos]

    members = frozenset().union(*(peb.members for peb in selected))
    val = selected[0].val
    for peb in selected[1:]:
        val = add_elements(val, peb.val)
    cost = sum(peb.ord_cost for peb in selected)
    child = lattice.child(vertex, i)
    child_idx = lattice.vertex_index(child.u)
    new_pebble = Pebble(conf._next_id, members, val, cost, child)
    conf._next_id += 1

    if not _well_placed_fast(conf, val, cost, child_idx):
        raise InternalInvariantError(
            f"merged pebble {new_pebble.pid} is not well placed at vertex {child.divisor}"
        )

    del pool[:weight]
    if not pool:
        del conf.pebbles_at[vidx]
    conf.pebbles_at.setdefault(child_idx, []).append(new_pebble)
    conf.move_log.append(
        MoveRecord(
            vertex_divisor=vertex.divisor,
            prime=p,
            coordinate=i,
            weight=weight,
            consumed=tuple(peb.pid for peb in consumed),
            selected=tuple(peb.pid for peb in selected),
            new_id=new_pebble.pid,
        )
    )
    if conf.debug:
        _debug_check(conf, new_pebble)
    return conf


def _debug_check(conf: Configuration, pebble: Pebble) -> None:
    """Recompute the new pebble from scratch and rescan pairwise disjointness."""
    val = identity(conf.dec)
    cost = 0
    for k in sorted(pebble.members):
        val = add_elements(val, conf.elements[k - 1])
        cost += order_cost(conf.elements[k - 1])
    if val != pebble.val or cost != pebble.ord_cost:
        raise InternalInvariantError(f"cached value of pebble {pebble.pid} disagrees with its members")
    seen: set[int] = set()
    for other in conf.live_pebbles():
        if other.members & seen:
            raise InternalInvariantError("live pebbles share member indices")
        seen |= other.members


def _greedy_plan(lattice: WeightedLattice, start: tuple[int, ...]) -> list[tuple[int, int]] | None:
    """Move (vertex index, coordinate) list reaching the root, or None on a stall.

    Preference order: highest occupied vertex first (ties by ascending exponent
    vector), then the cheapest down edge (ties by coordinate).
    """
    root = lattice.root_index
    if start[root] >= 1:
        return []
    prof = list(start)
    plan: list[tuple[int, int]] = []
    while True:
        step = None
        for vidx in lattice.scan_order:
            if vidx == root or prof[vidx] == 0:
                continue
            for (ci, w, child) in lattice.moves[vidx]:
                if prof[vidx] >= w:
                    step = (vidx, ci, w, child)
                    break
            if step is not None:
                break
        if step is None:
            return None
        vidx, ci, w, child = step
        prof[vidx] -= w
        prof[child] += 1
        plan.append((vidx, ci))
        if prof[root] >= 1:
            return plan


def _moves_iter(lattice: WeightedLattice, prof: tuple[int, ...]):
    root = lattice.root_index
    for vidx in lattice.scan_order:
        if vidx == root or prof[vidx] == 0:
            continue
        for (ci, w, child) in lattice.moves[vidx]:
            if prof[vidx] >= w:
                yield vidx, ci, w, child


def _search_plan(
    lattice: WeightedLattice, start: tuple[int, ...], node_limit: int = MAX_SEARCH_NODES
) -> list[tuple[int, int]] | None:
    """Exhaustive depth-first search over count profiles, memoizing dead ends.

    Every move strictly lowers the total pebble count, so the search space is
    finite and acyclic; `None` means no move sequence reaches the root at all.
    """
    root = lattice.root_index
    if start[root] >= 1:
        return []
    failed: set[tuple[int, ...]] = set()
    stack: list[tuple[tuple[int, ...], object, tuple[int, int] | None]] = [
        (start, _moves_iter(lattice, start), None)
    ]
    nodes = 0
    while stack:
        prof, it, _lead = stack[-1]
        step = next(it, None)  # type: ignore[arg-type]
        if step is None:
            failed.add(prof)
            stack.pop()
            continue
        vidx, ci, w, child = step
        nxt = list(prof)
        nxt[vidx] -= w
        nxt[child] += 1
        nxt = tuple(nxt)
        if nxt in failed:
            continue
        nodes += 1
        if nodes > node_limit:
            raise InternalInvariantError("fallback search exceeded its node budget")
        if nxt[root] >= 1:
            return [frame[2] for frame in stack[1:] if frame[2] is not None] + [(vidx, ci)]
        stack.append((nxt, _moves_iter(lattice, nxt), (vidx, ci)))
    return None


def solve_to_root(conf: Configuration) -> Pebble:
    """Drive merges until a pebble reaches the root and return it.

    Tries the greedy schedule first; on a stall it falls back to the exhaustive
    search from the initial profile, which is complete, so failure to find any
    plan is a bug by the lattice's pebbling number and raises accordingly.
    """
    existing = conf.root_pebble()
    if existing is not None:
        return existing
    profile = conf.count_profile()
    plan = _greedy_plan(conf.lattice, profile)
    if plan is None:
        conf.fallback_fired = True
        plan = _search_plan(conf.lattice, profile)
    if plan is None:
        raise InternalInvariantError("no move sequence reaches the root from a full configuration")
    for vidx, ci in plan:
        merge_step(conf, conf.lattice.vertex_at(vidx), ci)
    result = conf.root_pebble()
    if result is None:
        raise InternalInvariantError("planned moves did not produce a root pebble")
    return result


def _recompute(
    dec: PrimaryDecomposition, elements: Sequence[GroupElement], indices: Sequence[int]
) -> tuple[GroupElement, int]:
    total = identity(dec)
    cost = 0
    for k in indices:
        g = elements[k - 1]
        total = add_elements(total, g)
        cost += order_cost(g)
    return total, cost


def extract_certificate(
    root: Pebble,
    dec: PrimaryDecomposition,
    elements: Sequence[GroupElement],
    moves: Sequence[MoveRecord] = (),
) -> Certificate:
    """Recompute every condition from the member indices alone; caches are not trusted."""
    if root.vertex.divisor != 1:
        raise InputError("certificate extraction needs a pebble at the root")
    indices = tuple(sorted(root.members))
    if not indices:
        raise InternalInvariantError("root pebble has no members")
    total, cost = _recompute(dec, elements, indices)
    sum_is_zero = total == identity(dec)
    length_ok = len(indices) <= dec.exponent
    if not sum_is_zero or cost > dec.exponent or not length_ok:
        raise InternalInvariantError("root pebble fails recheck; solver state is corrupt")
    return Certificate(
        indices=indices,
        sum_is_zero=True,
        ord_cost=cost,
        bound=dec.exponent,
        length_bound_ok=True,
        moves=tuple(moves),
    )


def verify_certificate(
    dec: PrimaryDecomposition, elements: Sequence[GroupElement], indices: Sequence[int]
) -> Verdict:
    """Independent check of a claimed index set; lists every violated condition."""
    indices = list(indices)
    seen = set()
    for k in indices:
        if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= len(elements):
            raise InputError(f"index {k!r} outside 1..{len(elements)}")
        if k in seen:
            raise InputError(f"index {k} appears twice")
        seen.add(k)
    failures = []
    if not indices:
        failures.append("index set is empty")
        return Verdict(False, tuple(failures))
    total, cost = _recompute(dec, elements, indices)
    if total != identity(dec):
        failures.append("selected elements do not sum to the identity")
    if cost > dec.exponent:
        failures.append(
            f"order cost {cost} exceeds the bound {dec.exponent} (reciprocal sum above 1)"
        )
    return Verdict(not failures, tuple(failures))
