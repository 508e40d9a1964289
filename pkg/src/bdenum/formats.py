"""Plain-text instance formats.

hypergraph   ``h n m`` then m lines of 1-based vertices
graph        ``g n m [s]`` then m lines ``u v`` (directed arcs)
CNF          DIMACS ``p cnf n m`` then clauses of signed literals ending in 0
XOR          optional ``p xor n m`` then lines ``x v1 ... vk : b``

Lines starting with ``c`` are comments.  A file without a header whose
first line is an ``x`` equation is read as XOR with n = largest variable.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .bitword import BitWord
from .errors import MalformedClause, ParseError
from .graph import Graph
from .hypergraph import Hypergraph
from .sat import ClauseSet, XorSystem, ihs_polarity, monotone_polarity

Instance = Union[Hypergraph, Graph, ClauseSet, XorSystem]


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        out.append((number, line))
    return out


def _ints(tokens: list[str], line: int, offset: int = 0) -> list[int]:
    values = []
    for col, tok in enumerate(tokens, start=1 + offset):
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", line, col) from None
    return values


def _header(lines: list[tuple[int, str]], tag: str, min_fields: int, max_fields: int) -> list[int]:
    if not lines:
        raise ParseError("empty input")
    number, line = lines[0]
    tokens = line.split()
    if tokens[0] != tag:
        raise ParseError(f"expected header starting with {tag!r}", number, 1)
    values = _ints(tokens[1:], number, offset=1)
    if not min_fields <= len(values) <= max_fields:
        raise ParseError(f"header {tag!r} takes {min_fields}..{max_fields} numbers", number)
    if any(v < 0 for v in values):
        raise ParseError("header counts must be nonnegative", number)
    return values


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _lines(text)
    n, m = _header(lines, "h", 2, 2)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", lines[0][0])
    edges = []
    for number, line in body:
        vertices = _ints(line.split(), number)
        for col, v in enumerate(vertices, start=1):
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", number, col)
        if not vertices:
            raise ParseError("empty hyperedge", number)
        edges.append(vertices)
    return Hypergraph(n, edges)


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    values = _header(lines, "g", 2, 3)
    n, m = values[0], values[1]
    source = values[2] if len(values) == 3 else None
    if n < 1:
        raise ParseError("graph needs at least one vertex", lines[0][0])
    if source is not None and not 1 <= source <= n:
        raise ParseError(f"source {source} outside 1..{n}", lines[0][0], 4)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} arcs, found {len(body)}", lines[0][0])
    arcs = []
    for number, line in body:
        uv = _ints(line.split(), number)
        if len(uv) != 2:
            raise ParseError("arc lines hold exactly two vertices", number)
        for col, v in enumerate(uv, start=1):
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", number, col)
        arcs.append((uv[0], uv[1]))
    return Graph(n, tuple(arcs), source)


def parse_cnf(text: str, fragment: str | None = None) -> ClauseSet:
    lines = _lines(text)
    if not lines or lines[0][1].split()[:2] != ["p", "cnf"]:
        raise ParseError("expected DIMACS header 'p cnf n m'", lines[0][0] if lines else None, 1)
    number, header = lines[0]
    counts = _ints(header.split()[2:], number, offset=2)
    if len(counts) != 2 or min(counts) < 0:
        raise ParseError("header must be 'p cnf n m'", number)
    n, m = counts
    clauses: list[list[int]] = []
    current: list[int] = []
    last_line = number
    for number, line in lines[1:]:
        last_line = number
        for col, lit in enumerate(_ints(line.split(), number), start=1):
            if lit == 0:
                clauses.append(current)
                current = []
                continue
            if abs(lit) > n:
                raise ParseError(f"literal {lit} outside variables 1..{n}", number, col)
            current.append(lit)
    if current:
        raise ParseError("last clause is not terminated by 0", last_line)
    if len(clauses) != m:
        raise ParseError(f"header announces {m} clauses, found {len(clauses)}", lines[0][0])
    cs = ClauseSet(n, clauses)
    if fragment is not None:
        check_fragment(cs, fragment, _clause_lines(lines))
    return cs


def _clause_lines(lines: list[tuple[int, str]]) -> list[int]:
    """Line on which each clause ends, for diagnostics."""
    ends = []
    for number, line in lines[1:]:
        ends.extend(number for tok in line.split() if tok == "0")
    return ends


def check_fragment(cs: ClauseSet, fragment: str, clause_lines: list[int] | None = None) -> None:
    def where(i: int) -> int | None:
        return clause_lines[i] if clause_lines and i < len(clause_lines) else None

    try:
        if fragment == "krom":
            for i, clause in enumerate(cs.clauses):
                if not 1 <= len(clause) <= 2:
                    raise ParseError(f"Krom clause must have 1 or 2 literals, got {len(clause)}", where(i))
        elif fragment == "monotone":
            monotone_polarity(cs)
        elif fragment == "ihs":
            ihs_polarity(cs)
    except MalformedClause as exc:
        raise ParseError(str(exc)) from None


def parse_xor(text: str) -> XorSystem:
    lines = _lines(text)
    declared_n = None
    body = lines
    if lines and lines[0][1].split()[:2] == ["p", "xor"]:
        number, header = lines[0]
        counts = _ints(header.split()[2:], number, offset=2)
        if len(counts) != 2 or min(counts) < 0:
            raise ParseError("header must be 'p xor n m'", number)
        declared_n, m = counts
        body = lines[1:]
        if len(body) != m:
            raise ParseError(f"header announces {m} equations, found {len(body)}", number)
    equations = []
    for number, line in body:
        tokens = line.split()
        if tokens[0] != "x":
            raise ParseError("equation lines start with 'x'", number, 1)
        if ":" not in tokens:
            raise ParseError("missing ':' before the right-hand side", number)
        colon = tokens.index(":")
        variables = _ints(tokens[1:colon], number, offset=1)
        rhs_tokens = tokens[colon + 1 :]
        if len(rhs_tokens) != 1 or rhs_tokens[0] not in ("0", "1"):
            raise ParseError("right-hand side must be a single 0 or 1", number, colon + 2)
        for col, v in enumerate(variables, start=2):
            if v < 1 or (declared_n is not None and v > declared_n):
                raise ParseError(f"variable {v} out of range", number, col)
        equations.append((variables, int(rhs_tokens[0])))
    n = declared_n if declared_n is not None else max((max(vs, default=0) for vs, _ in equations), default=0)
    return XorSystem(n, equations)


def parse_word(text: str) -> BitWord:
    lines = _lines(text)
    if len(lines) != 1:
        raise ParseError("expected a single binary word")
    number, line = lines[0]
    try:
        return BitWord.from_str(line)
    except ValueError as exc:
        raise ParseError(str(exc), number) from None


def detect_format(text: str) -> str:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input")
    tokens = lines[0][1].split()
    if tokens[0] == "h":
        return "hypergraph"
    if tokens[0] == "g":
        return "graph"
    if tokens[:2] == ["p", "cnf"]:
        return "cnf"
    if tokens[:2] == ["p", "xor"] or tokens[0] == "x":
        return "xor"
    if set(tokens[0]) <= {"0", "1"}:
        return "word"
    raise ParseError(f"unrecognised header {lines[0][1]!r}", lines[0][0], 1)


def parse_instance(source: str | Path, fragment: str | None = None) -> Instance | BitWord:
    """Parse text (or a path) in any supported format.

    ``fragment`` ("monotone", "ihs", "krom") applies the clause-shape check
    for CNF input.
    """
    text = Path(source).read_text() if isinstance(source, Path) else source
    fmt = detect_format(text)
    if fmt == "hypergraph":
        return parse_hypergraph(text)
    if fmt == "graph":
        return parse_graph(text)
    if fmt == "cnf":
        return parse_cnf(text, fragment)
    if fmt == "xor":
        return parse_xor(text)
    return parse_word(text)


def serialize(instance: Instance | BitWord) -> str:
    if isinstance(instance, Hypergraph):
        lines = [f"h {instance.n} {len(instance.edges)}"]
        lines += [" ".join(map(str, sorted(e))) for e in instance.edges]
    elif isinstance(instance, Graph):
        head = f"g {instance.n} {len(instance.arcs)}"
        if instance.source is not None:
            head += f" {instance.source}"
        lines = [head] + [f"{u} {v}" for u, v in instance.arcs]
    elif isinstance(instance, ClauseSet):
        lines = [f"p cnf {instance.n} {len(instance.clauses)}"]
        lines += [" ".join(map(str, c + (0,))) for c in instance.clauses]
    elif isinstance(instance, XorSystem):
        lines = [f"p xor {instance.n} {len(instance.equations)}"]
        lines += ["x " + " ".join(map(str, sorted(vs))) + f" : {b}" for vs, b in instance.equations]
    elif isinstance(instance, BitWord):
        lines = [str(instance)]
    else:
        raise TypeError(f"cannot serialize {type(instance).__name__}")
    return "\n".join(lines) + "\n"
