from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """Graph on vertices 1..n.  Arcs are directed; undirected uses read both ways."""

    n: int
    arcs: tuple[tuple[int, int], ...] = ()
    source: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        for u, v in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u}, {v}) outside 1..{self.n}")
        if self.source is not None and not 1 <= self.source <= self.n:
            raise ValueError(f"source {self.source} outside 1..{self.n}")

    def successors(self) -> list[int]:
        """Adjacency rows as bitmasks; bit ``v - 1`` of row ``u - 1`` marks arc u -> v."""
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[u - 1] |= 1 << (v - 1)
        return rows

    def closed_neighborhoods(self) -> list[frozenset[int]]:
        nbrs = [{v} for v in range(1, self.n + 1)]
        for u, v in self.arcs:
            nbrs[u - 1].add(v)
            nbrs[v - 1].add(u)
        return [frozenset(s) for s in nbrs]
