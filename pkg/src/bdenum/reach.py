"""Vertices reachable from a source, one BFS layer at a time.

The auxiliary memory holds two n-bit masks: every vertex discovered so far
and the current layer.  The emitted vertex doubles as the cursor inside the
layer, since a layer is emitted in ascending vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bitword import BitWord, mask_to_word, word_to_mask
from .core import AugmentedSolution, EnumeratorSpec, polynomial
from .errors import InvalidPredecessor
from .graph import Graph


@dataclass(frozen=True)
class ReachArtifact:
    n: int
    rows: tuple[int, ...]  # rows[u - 1]: successors of u, bit v - 1 for vertex v
    source: int

    @property
    def width(self) -> int:
        return self.n.bit_length()


@dataclass(frozen=True)
class ReachMemory:
    visited: int
    frontier: int


def reach_precompute(g: Graph) -> ReachArtifact:
    return ReachArtifact(g.n, tuple(g.successors()), g.source or 1)


def reach_first(art: ReachArtifact) -> tuple[int, ReachMemory]:
    s = art.source
    return s, ReachMemory(1 << (s - 1), 1 << (s - 1))


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


def layer_product(rows: tuple[int, ...], frontier: int) -> int:
    """Boolean vector-matrix product: all successors of the frontier."""
    out = 0
    u = 0
    while frontier:
        if frontier & 1:
            out |= rows[u]
        frontier >>= 1
        u += 1
    return out


def reach_next(art: ReachArtifact, vertex: int, mem: ReachMemory) -> tuple[int, ReachMemory]:
    full = (1 << art.n) - 1
    if (
        not 1 <= vertex <= art.n
        or mem.visited & ~full
        or mem.frontier & ~mem.visited
        or not mem.visited >> (art.source - 1) & 1
        or not mem.frontier >> (vertex - 1) & 1
    ):
        raise InvalidPredecessor(f"vertex {vertex} with memory {mem} is inconsistent")
    pending = mem.frontier >> vertex << vertex
    if pending:
        return _lowest(pending), mem
    layer = layer_product(art.rows, mem.frontier) & ~mem.visited
    if not layer:
        return vertex, mem
    return _lowest(layer), ReachMemory(mem.visited | layer, layer)


def _encode(art: ReachArtifact, vertex: int, mem: ReachMemory) -> AugmentedSolution:
    memory = mask_to_word(mem.visited, art.n).concat(mask_to_word(mem.frontier, art.n))
    return AugmentedSolution(BitWord(vertex, art.width), memory)


def _decode_memory(art: ReachArtifact, aug: AugmentedSolution) -> ReachMemory:
    if aug.memory.length != 2 * art.n:
        raise InvalidPredecessor("reach memory must hold 2n bits")
    visited, frontier = aug.memory.split(art.n)
    return ReachMemory(word_to_mask(visited), word_to_mask(frontier))


def _next(art: ReachArtifact, aug: AugmentedSolution) -> AugmentedSolution:
    vertex, mem = reach_next(art, aug.solution.value, _decode_memory(art, aug))
    return _encode(art, vertex, mem)


def reachable_set(g: Graph) -> int:
    """Closure row of the source by repeated squaring of the reflexive adjacency matrix."""
    return _closure_rows(g)[(g.source or 1) - 1]


@lru_cache(maxsize=64)
def _closure_rows(g: Graph) -> tuple[int, ...]:
    n = g.n
    rows = [r | (1 << u) for u, r in enumerate(g.successors())]
    span = 1
    while span < n:
        rows = [layer_product(tuple(rows), r) for r in rows]
        span *= 2
    return tuple(rows)


def is_reachable(g: Graph, word: BitWord) -> bool:
    v = word.value
    return word.length == g.n.bit_length() and 1 <= v <= g.n and bool(reachable_set(g) >> (v - 1) & 1)


REACH = EnumeratorSpec(
    problem="reach",
    precompute=reach_precompute,
    first=lambda art: _encode(art, *reach_first(art)),
    next=_next,
    budget=polynomial(lambda n: 2 * n, "2n"),
    checker=is_reachable,
    size=lambda g: g.n,
    length=lambda g: g.n.bit_length(),
    order="set",
)
