"""The weighted divisor lattice: a product of paths with level-dependent edge weights.

Vertices are the divisors of the group exponent, written as exponent vectors u
with 0 <= u[i] <= heights[i]. The down edge at level k in coordinate i carries
weight primes[i] ** duals[i][k-1]; the product of all per-level weights equals
the group order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import InputError, InternalInvariantError
from .groups import PrimaryDecomposition
from .partitions import dual_partition, residual_exponents

MAX_LATTICE_VERTICES = 1_000_000


@dataclass(frozen=True)
class LatticeVertex:
    u: tuple[int, ...]
    divisor: int

    @property
    def height(self) -> int:
        return sum(self.u)


@dataclass(frozen=True)
class WeightedLattice:
    """Complete vertex, weight, and move tables for one group.

    `moves[v]` lists the down edges leaving vertex index v as
    (coordinate, weight, child index) sorted by (weight, coordinate), the order
    the scheduler prefers. `scan_order` lists vertex indices by descending
    height, ties by ascending exponent vector. `residual_moduli[v][i][j]` is
    primes[i] raised to the residual exponent at v, precomputed because the
    engine checks pebble congruences against it after every move.
    """

    dec: PrimaryDecomposition
    duals: tuple[tuple[int, ...], ...]
    level_weights: tuple[tuple[int, ...], ...]
    strides: tuple[int, ...]
    num_vertices: int
    vertices: tuple[LatticeVertex, ...]
    moves: tuple[tuple[tuple[int, int, int], ...], ...]
    scan_order: tuple[int, ...]
    residual_moduli: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def root_index(self) -> int:
        return 0

    def vertex_index(self, u: tuple[int, ...]) -> int:
        return sum(ui * s for ui, s in zip(u, self.strides))

    def vertex_at(self, index: int) -> LatticeVertex:
        return self.vertices[index]

    def down_edge_weight(self, vertex: LatticeVertex, coordinate: int) -> int:
        """Weight of the down edge leaving `vertex` in `coordinate` (0-based)."""
        if not 0 <= coordinate < len(vertex.u):
            raise InputError(f"coordinate {coordinate} outside the lattice dimensions")
        level = vertex.u[coordinate]
        if level < 1:
            raise InputError(f"vertex {vertex.divisor} has no down edge in coordinate {coordinate}")
        return self.level_weights[coordinate][level - 1]

    def child(self, vertex: LatticeVertex, coordinate: int) -> LatticeVertex:
        """Endpoint of the down edge: same vertex with coordinate lowered by one."""
        if vertex.u[coordinate] < 1:
            raise InputError(f"vertex {vertex.divisor} has no down edge in coordinate {coordinate}")
        u = tuple(x - 1 if i == coordinate else x for i, x in enumerate(vertex.u))
        return self.vertices[self.vertex_index(u)]


def build_lattice(dec: PrimaryDecomposition, max_vertices: int = MAX_LATTICE_VERTICES) -> WeightedLattice:
    heights = dec.heights
    count = math.prod(h + 1 for h in heights)
    if count > max_vertices:
        raise InputError(f"lattice would have {count} vertices, above the bound {max_vertices}")

    strides = []
    acc = 1
    for h in reversed(heights):
        strides.append(acc)
        acc *= h + 1
    strides = tuple(reversed(strides))

    duals = tuple(dual_partition(row) for row in dec.exponents)
    level_weights = tuple(
        tuple(p**d for d in dual) for p, dual in zip(dec.primes, duals)
    )

    vertices = []
    for u in itertools.product(*(range(h + 1) for h in heights)):
        divisor = math.prod(p**ui for p, ui in zip(dec.primes, u))
        vertices.append(LatticeVertex(u, divisor))
    vertices = tuple(vertices)

    moves = []
    residual_moduli = []
    for idx, v in enumerate(vertices):
        out = []
        for i, ui in enumerate(v.u):
            if ui >= 1:
                out.append((i, level_weights[i][ui - 1], idx - strides[i]))
        out.sort(key=lambda mv: (mv[1], mv[0]))
        moves.append(tuple(out))
        residual = residual_exponents(dec.exponents, v.u)
        residual_moduli.append(
            tuple(tuple(p**e for e in row) for p, row in zip(dec.primes, residual))
        )
    scan_order = tuple(sorted(range(count), key=lambda idx: (-vertices[idx].height, vertices[idx].u)))

    return WeightedLattice(
        dec=dec,
        duals=duals,
        level_weights=level_weights,
        strides=strides,
        num_vertices=count,
        vertices=vertices,
        moves=tuple(moves),
        scan_order=scan_order,
        residual_moduli=tuple(residual_moduli),
    )


def vertex_of_order(order: int, dec: PrimaryDecomposition) -> LatticeVertex:
    """Vertex carrying the divisor `order`; element orders always divide the exponent."""
    if order < 1 or dec.exponent % order != 0:
        raise InternalInvariantError(f"{order} does not divide the group exponent {dec.exponent}")
    u = []
    rest = order
    for p in dec.primes:
        v = 0
        while rest % p == 0:
            rest //= p
            v += 1
        u.append(v)
    if rest != 1:
        raise InternalInvariantError(f"{order} has a prime factor outside the group's primes")
    return LatticeVertex(tuple(u), order)
