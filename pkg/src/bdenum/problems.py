"""Name -> enumerator table used by the command line."""

from __future__ import annotations

from dataclasses import dataclass

from . import gray, hypergraph, reach, sat, witness
from .core import EnumeratorSpec


@dataclass(frozen=True)
class Problem:
    spec: EnumeratorSpec
    source: str  # hypergraph, graph, cnf, xor, gray, witness
    fragment: str | None = None


PROBLEMS: dict[str, Problem] = {
    "transversal": Problem(hypergraph.TRANSVERSAL, "hypergraph"),
    "dominating": Problem(hypergraph.DOMINATING, "graph"),
    "monotone": Problem(sat.MONOTONE, "cnf", "monotone"),
    "ihs": Problem(sat.IHS, "cnf", "ihs"),
    "krom": Problem(sat.KROM, "cnf", "krom"),
    "xor": Problem(sat.XOR, "xor"),
    "reach": Problem(reach.REACH, "graph"),
    "gray-lex": Problem(gray.LEX, "gray"),
    "gray-ordered": Problem(gray.ORDERED, "gray"),
    "gray-rank": Problem(gray.UNORDERED_FROM_RANK, "gray"),
    "gray-word": Problem(gray.UNORDERED_FROM_WORD, "gray"),
    "gray-ordered-rank": Problem(gray.ORDERED_FROM_RANK, "gray"),
    "gray-ordered-word": Problem(gray.ORDERED_FROM_WORD, "gray"),
    "witness-const": Problem(witness.WITNESS_CONST, "witness"),
    "witness-poly": Problem(witness.WITNESS_POLY, "witness"),
}
