"""Transversals of a hypergraph and dominating sets of a graph.

Both are enumerated in lexicographic order with 1 < 0: the all-ones word
comes first, and a successor keeps the longest possible prefix of its
predecessor, flips one 1 to 0 and pads with ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .bitword import BitWord
from .core import AugmentedSolution, EnumeratorSpec
from .errors import InvalidPredecessor
from .graph import Graph


@dataclass(frozen=True, init=False)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        unique: list[frozenset[int]] = []
        for edge in edges:
            e = frozenset(edge)
            if not e:
                raise ValueError("empty hyperedge")
            if any(not 1 <= v <= n for v in e):
                raise ValueError(f"hyperedge {sorted(e)} outside 1..{n}")
            if e not in unique:
                unique.append(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(unique))
        object.__setattr__(self, "_masks", tuple(_edge_mask(e, n) for e in unique))

    @property
    def masks(self) -> tuple[int, ...]:
        """Edges as masks in word layout (vertex i is bit n - i)."""
        return self._masks


def _edge_mask(edge: frozenset[int], n: int) -> int:
    mask = 0
    for v in edge:
        mask |= 1 << (n - v)
    return mask


def _hits_all(masks: tuple[int, ...], value: int) -> bool:
    for m in masks:
        if not value & m:
            return False
    return True


def is_transversal(h: Hypergraph, y: BitWord) -> bool:
    return y.length == h.n and _hits_all(h.masks, y.value)


def transversal_first(h: Hypergraph) -> BitWord:
    return BitWord.ones(h.n)


def transversal_next(h: Hypergraph, y: BitWord) -> BitWord:
    if not is_transversal(h, y):
        raise InvalidPredecessor(f"{y} is not a transversal")
    masks = h.masks
    v = y.value
    # position p counted from the right is index n - p; smallest p = largest index
    for p in range(h.n):
        if v >> p & 1:
            z = (v >> (p + 1) << (p + 1)) | ((1 << p) - 1)
            if _hits_all(masks, z):
                return BitWord(z, h.n)
    return y


@lru_cache(maxsize=64)
def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.n, g.closed_neighborhoods())


def is_dominating(g: Graph, y: BitWord) -> bool:
    return is_transversal(neighborhood_hypergraph(g), y)


def dominating_first(g: Graph) -> BitWord:
    return BitWord.ones(g.n)


def dominating_next(g: Graph, y: BitWord) -> BitWord:
    return transversal_next(neighborhood_hypergraph(g), y)


TRANSVERSAL = EnumeratorSpec(
    problem="transversal",
    precompute=lambda h: h,
    first=lambda h: AugmentedSolution(transversal_first(h)),
    next=lambda h, aug: AugmentedSolution(transversal_next(h, aug.solution)),
    checker=is_transversal,
    size=lambda h: h.n,
    length=lambda h: h.n,
    order="lex-1<0",
)

# the closed-neighbourhood hypergraph is a syntactic rewrite of the input, not a computation
DOMINATING = EnumeratorSpec(
    problem="dominating",
    precompute=neighborhood_hypergraph,
    first=lambda h: AugmentedSolution(transversal_first(h)),
    next=lambda h, aug: AugmentedSolution(transversal_next(h, aug.solution)),
    checker=is_dominating,
    size=lambda g: g.n,
    length=lambda h: h.n,
    order="lex-1<0",
)
