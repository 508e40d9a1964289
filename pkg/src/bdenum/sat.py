"""Solution enumeration for monotone, IHS, Krom (2-CNF) and XOR formulas.

Clauses use DIMACS literals: ``v`` for x_v and ``-v`` for its negation.
Assignments are words with variable 1 leftmost, so variable ``v`` lives at
bit ``n - v`` of the word value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitword import BitWord, mask_to_word
from .core import AugmentedSolution, EnumeratorSpec, constant
from .errors import InvalidPredecessor, MalformedClause
from .gray import EVEN, ODD, ordered_gray_next
from .hypergraph import Hypergraph, transversal_next

Clause = tuple[int, ...]


@dataclass(frozen=True)
class ClauseSet:
    n: int
    clauses: tuple[Clause, ...]

    def __init__(self, n: int, clauses: Iterable[Sequence[int]] = ()):
        normalized = []
        for clause in clauses:
            c = tuple(int(lit) for lit in clause)
            for lit in c:
                if lit == 0 or abs(lit) > n:
                    raise MalformedClause(f"literal {lit} outside variables 1..{n}")
            normalized.append(c)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "clauses", tuple(normalized))


def _bit(n: int, v: int) -> int:
    return 1 << (n - v)


def satisfies(cs: ClauseSet, y: BitWord) -> bool:
    if y.length != cs.n:
        return False
    n, value = cs.n, y.value
    for clause in cs.clauses:
        for lit in clause:
            if (value >> (n - abs(lit)) & 1) == (lit > 0):
                break
        else:
            return False
    return True


def _negated(cs: ClauseSet) -> ClauseSet:
    return ClauseSet(cs.n, [[-lit for lit in c] for c in cs.clauses])


def _closure(succ: list[int]) -> list[int]:
    """Reflexive-transitive closure of a digraph given as successor bitmasks."""
    size = len(succ)
    tc = []
    for start in range(size):
        seen = 1 << start
        stack = [start]
        while stack:
            u = stack.pop()
            fresh = succ[u] & ~seen
            seen |= fresh
            while fresh:
                low = fresh & -fresh
                stack.append(low.bit_length() - 1)
                fresh ^= low
        tc.append(seen)
    return tc


# -- monotone ---------------------------------------------------------------


def monotone_polarity(cs: ClauseSet) -> str:
    signs = {lit > 0 for c in cs.clauses for lit in c}
    if signs == {False}:
        return "negative"
    if len(signs) > 1:
        raise MalformedClause("monotone clause set mixes positive and negative literals")
    return "positive"


@dataclass(frozen=True)
class MonotoneArtifact:
    hypergraph: Hypergraph
    negative: bool


def monotone_precompute(cs: ClauseSet) -> MonotoneArtifact | None:
    negative = monotone_polarity(cs) == "negative"
    if any(not c for c in cs.clauses):
        return None
    edges = [{abs(lit) for lit in c} for c in cs.clauses]
    return MonotoneArtifact(Hypergraph(cs.n, edges), negative)


def monotone_first(art: MonotoneArtifact) -> BitWord:
    n = art.hypergraph.n
    return BitWord.zeros(n) if art.negative else BitWord.ones(n)


def monotone_next(art: MonotoneArtifact, y: BitWord) -> BitWord:
    if art.negative:
        return transversal_next(art.hypergraph, y.complement()).complement()
    return transversal_next(art.hypergraph, y)


# -- IHS --------------------------------------------------------------------


def _ihs_shape(clause: Clause) -> bool:
    """Positive form: a positive clause, a negative unit, or (x or not x')."""
    if all(lit > 0 for lit in clause):
        return True
    if len(clause) == 1:
        return True  # (not x)
    return len(clause) == 2 and (clause[0] > 0) != (clause[1] > 0)


def ihs_polarity(cs: ClauseSet) -> str:
    if all(_ihs_shape(c) for c in cs.clauses):
        return "positive"
    if all(_ihs_shape(tuple(-lit for lit in c)) for c in cs.clauses):
        return "negative"
    raise MalformedClause("clause set is not IHS in either polarity")


@dataclass(frozen=True)
class IhsArtifact:
    n: int
    clauses: ClauseSet  # positive form
    tc: tuple[int, ...]  # tc[v - 1]: variables forced to 0 by x_v = 0, word layout
    forced: int  # variables fixed to 0 by negative units
    positive: tuple[int, ...]  # positive clauses after removing forced variables
    implications: tuple[tuple[int, int], ...]  # (x, x') bits: x = 0 forces x' = 0
    negative: bool

    def check(self, value: int) -> bool:
        if value & self.forced:
            return False
        for m in self.positive:
            if not value & m:
                return False
        for bx, by in self.implications:
            if value & by and not value & bx:
                return False
        return True


def ihs_precompute(cs: ClauseSet) -> IhsArtifact | None:
    negative = ihs_polarity(cs) == "negative"
    pos_cs = _negated(cs) if negative else cs
    n = pos_cs.n
    succ = [0] * n
    units = []
    positive_clauses = []
    implications = []
    for clause in pos_cs.clauses:
        if all(lit > 0 for lit in clause):
            positive_clauses.append(clause)
        elif len(clause) == 1:
            units.append(-clause[0])
        else:
            x = max(clause)
            x2 = -min(clause)
            succ[x - 1] |= 1 << (x2 - 1)
            implications.append((_bit(n, x), _bit(n, x2)))
    reach = _closure(succ)
    tc = tuple(mask_to_word(r, n).value for r in reach)
    forced = 0
    for x in units:
        forced |= tc[x - 1]
    simplified = []
    for clause in positive_clauses:
        m = 0
        for lit in clause:
            m |= _bit(n, lit)
        m &= ~forced
        if not m:
            return None  # empty clause after propagation
        simplified.append(m)
    return IhsArtifact(n, pos_cs, tc, forced, tuple(simplified), tuple(implications), negative)


def ihs_first(art: IhsArtifact) -> BitWord:
    word = BitWord(((1 << art.n) - 1) & ~art.forced, art.n)
    return word.complement() if art.negative else word


def _ihs_next_positive(art: IhsArtifact, y: BitWord) -> BitWord:
    n, v = art.n, y.value
    if y.length != n or not art.check(v):
        raise InvalidPredecessor(f"{y} does not satisfy the IHS instance")
    # zeros[i]: union of tc over earlier zero positions, index i = 1..n
    zeros = [0] * (n + 1)
    acc = art.forced
    for i in range(1, n + 1):
        zeros[i] = acc
        if not v >> (n - i) & 1:
            acc |= art.tc[i - 1]
    for i in range(n, 0, -1):
        p = n - i
        if v >> p & 1:
            w = ((1 << p) - 1) & ~(zeros[i] | art.tc[i - 1])
            z = (v >> (p + 1) << (p + 1)) | w
            if art.check(z):
                return BitWord(z, n)
    return y


def ihs_next(art: IhsArtifact, y: BitWord) -> BitWord:
    if art.negative:
        return _ihs_next_positive(art, y.complement()).complement()
    return _ihs_next_positive(art, y)


# -- Krom -------------------------------------------------------------------


def _lit_id(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (lit < 0)


def _lit_name(lit_id: int) -> int:
    v = lit_id // 2 + 1
    return -v if lit_id & 1 else v


@dataclass(frozen=True)
class KromArtifact:
    n: int
    clauses: ClauseSet
    arcs: tuple[tuple[int, int], ...]  # implication graph over literal ids
    tc: tuple[int, ...]  # per literal id, reachable literal ids as a bitmask
    order: tuple[int, ...]  # topological order of the contracted graph (representative ids)
    sequence: tuple[int, ...]  # M, as DIMACS literals
    tc_m: tuple[int, ...]  # tc restricted to M, as masks over M-word positions
    expand: tuple[tuple[int, int], ...]  # per variable: (M index, flip)

    @property
    def width(self) -> int:
        return len(self.sequence)

    def decode(self, y: BitWord) -> BitWord:
        value = 0
        for v, (idx, flip) in enumerate(self.expand, start=1):
            bit = (y.value >> (self.width - 1 - idx) & 1) ^ flip
            value |= bit << (self.n - v)
        return BitWord(value, self.n)


def implication_graph(cs: ClauseSet) -> list[tuple[int, int]]:
    arcs = []
    for clause in cs.clauses:
        if len(clause) == 1:
            a = b = clause[0]
        elif len(clause) == 2:
            a, b = clause
        else:
            raise MalformedClause(f"Krom clauses have one or two literals, got {clause}")
        arcs.append((_lit_id(-a), _lit_id(b)))
        arcs.append((_lit_id(-b), _lit_id(a)))
    return sorted(set(arcs))


def _layered_topological_order(vertices: list[int], arcs: set[tuple[int, int]]) -> list[int]:
    indegree = {v: 0 for v in vertices}
    out: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in arcs:
        indegree[b] += 1
        out[a].append(b)
    layer = sorted(v for v in vertices if indegree[v] == 0)
    order = []
    while layer:
        order.extend(layer)
        following = []
        for a in layer:
            for b in out[a]:
                indegree[b] -= 1
                if indegree[b] == 0:
                    following.append(b)
        layer = sorted(following)
    return order


def krom_precompute(cs: ClauseSet) -> KromArtifact | None:
    n = cs.n
    arcs = implication_graph(cs)
    succ = [0] * (2 * n)
    for a, b in arcs:
        succ[a] |= 1 << b
    tc = _closure(succ)
    for v in range(n):
        pos, neg = 2 * v, 2 * v + 1
        if tc[pos] >> neg & 1 and tc[neg] >> pos & 1:
            return None
    rep = []
    for lit in range(2 * n):
        scc = 0
        reach = tc[lit]
        while reach:
            low = reach & -reach
            other = low.bit_length() - 1
            if tc[other] >> lit & 1:
                scc |= low
            reach ^= low
        rep.append((scc & -scc).bit_length() - 1)
    reps = sorted(set(rep))
    contracted = {(rep[a], rep[b]) for a, b in arcs if rep[a] != rep[b]}
    order = _layered_topological_order(reps, contracted)
    seen_vars: set[int] = set()
    sequence: list[int] = []
    for lit in order:
        if lit // 2 not in seen_vars:
            seen_vars.add(lit // 2)
            sequence.append(lit)
    width = len(sequence)
    index_of_var = {lit // 2: i for i, lit in enumerate(sequence)}
    tc_m = []
    for lit in sequence:
        m = 0
        for j, other in enumerate(sequence):
            if tc[lit] >> other & 1:
                m |= 1 << (width - 1 - j)
        tc_m.append(m)
    expand = []
    for v in range(n):
        r = rep[2 * v]
        idx = index_of_var[r // 2]
        expand.append((idx, (r ^ sequence[idx]) & 1))
    return KromArtifact(
        n=n,
        clauses=cs,
        arcs=tuple(arcs),
        tc=tuple(tc),
        order=tuple(order),
        sequence=tuple(_lit_name(lit) for lit in sequence),
        tc_m=tuple(tc_m),
        expand=tuple(expand),
    )


def krom_first(art: KromArtifact) -> BitWord:
    return BitWord.zeros(art.width)


def krom_next(art: KromArtifact, y: BitWord) -> BitWord:
    width, v = art.width, y.value
    if y.length != width or not satisfies(art.clauses, art.decode(y)):
        raise InvalidPredecessor(f"{y} does not satisfy the Krom instance over M")
    ones = [0] * (width + 1)
    acc = 0
    for i in range(1, width + 1):
        ones[i] = acc
        if v >> (width - i) & 1:
            acc |= art.tc_m[i - 1]
    for i in range(width, 0, -1):
        p = width - i
        if not v >> p & 1:
            w = ((1 << p) - 1) & (ones[i] | art.tc_m[i - 1])
            z = BitWord((v >> (p + 1) << (p + 1)) | (1 << p) | w, width)
            if satisfies(art.clauses, art.decode(z)):
                return z
    return y


# -- XOR --------------------------------------------------------------------


@dataclass(frozen=True)
class XorSystem:
    n: int
    equations: tuple[tuple[frozenset[int], int], ...]

    def __init__(self, n: int, equations: Iterable[tuple[Iterable[int], int]] = ()):
        eqs = []
        for variables, rhs in equations:
            vs = tuple(int(v) for v in variables)
            if any(not 1 <= v <= n for v in vs):
                raise MalformedClause(f"XOR equation mentions a variable outside 1..{n}")
            if rhs not in (0, 1):
                raise MalformedClause(f"right-hand side must be 0 or 1, got {rhs}")
            # x + x = 0 over GF(2)
            odd = frozenset(v for v in set(vs) if vs.count(v) % 2)
            eqs.append((odd, rhs))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "equations", tuple(eqs))

    def rows(self) -> list[tuple[int, int]]:
        out = []
        for variables, rhs in self.equations:
            m = 0
            for v in variables:
                m |= _bit(self.n, v)
            out.append((m, rhs))
        return out


def xor_satisfies(system: XorSystem, y: BitWord) -> bool:
    if y.length != system.n:
        return False
    return all(bin(y.value & m).count("1") % 2 == rhs for m, rhs in system.rows())


@dataclass(frozen=True)
class TriangularSystem:
    n: int
    rows: tuple[tuple[int, int, int], ...]  # (pivot variable, row mask, rhs), fully reduced
    free: tuple[int, ...]  # free variables in ascending order
    s0: BitWord
    influence: tuple[frozenset[int], ...]  # L(x_i) per free variable, as dependent variables

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def k(self) -> int:
        return len(self.free)

    def influence_mask(self, i: int) -> int:
        m = 0
        for v in self.influence[i]:
            m |= _bit(self.n, v)
        return m

    def prefix(self, y: BitWord) -> BitWord:
        return BitWord.from_bits(y.value >> (self.n - v) & 1 for v in self.free)

    def check(self, y: BitWord) -> bool:
        return y.length == self.n and all(
            bin(y.value & m).count("1") % 2 == rhs for _, m, rhs in self.rows
        )


def xor_precompute(system: XorSystem) -> TriangularSystem | None:
    n = system.n
    pivots: list[list[int]] = []  # [pivot bit, mask, rhs]
    for mask, rhs in system.rows():
        for pbit, pmask, prhs in pivots:
            if mask & pbit:
                mask ^= pmask
                rhs ^= prhs
        if not mask:
            if rhs:
                return None
            continue
        # rightmost variable in the row, i.e. the highest variable index
        pbit = mask & -mask
        for row in pivots:
            if row[1] & pbit:
                row[1] ^= mask
                row[2] ^= rhs
        pivots.append([pbit, mask, rhs])
    rows = tuple(sorted((n - (pbit.bit_length() - 1), mask, rhs) for pbit, mask, rhs in pivots))
    dependent = {r[0] for r in rows}
    free = tuple(v for v in range(1, n + 1) if v not in dependent)
    s0 = 0
    for pivot, _, rhs in rows:
        if rhs:
            s0 |= _bit(n, pivot)
    influence = []
    for f in free:
        fb = _bit(n, f)
        influence.append(frozenset(pivot for pivot, mask, _ in rows if mask & fb))
    return TriangularSystem(n, rows, free, BitWord(s0, n), tuple(influence))


def xor_first(t: TriangularSystem) -> tuple[BitWord, int]:
    return t.s0, ODD


def xor_next(t: TriangularSystem, y: BitWord, state: int) -> tuple[BitWord, int]:
    if not t.check(y):
        raise InvalidPredecessor(f"{y} does not solve the XOR system")
    if t.k == 0:
        return y, state
    w = t.prefix(y)
    w2, state2 = ordered_gray_next(w, state)
    if w2 == w:
        return y, state
    i = t.k - 1 - ((w.value ^ w2.value).bit_length() - 1)
    flipped = y.value ^ _bit(t.n, t.free[i]) ^ t.influence_mask(i)
    return BitWord(flipped, t.n), state2


# -- specs ------------------------------------------------------------------


def _xor_next(t: TriangularSystem, aug: AugmentedSolution) -> AugmentedSolution:
    if aug.memory.length != 1:
        raise InvalidPredecessor("XOR enumeration carries exactly one memory bit")
    y, state = xor_next(t, aug.solution, aug.memory.value)
    return AugmentedSolution(y, BitWord(state, 1))


def _xor_first(t: TriangularSystem) -> AugmentedSolution:
    y, state = xor_first(t)
    return AugmentedSolution(y, BitWord(state, 1))


def _monotone_checker(cs: ClauseSet, y: BitWord) -> bool:
    return satisfies(cs, y)


def _dual_order(art: MonotoneArtifact | IhsArtifact, y: BitWord) -> BitWord:
    # Negative instances run the positive algorithm on complemented words,
    # so the 1<0 order holds after complementing back.
    return y.complement() if art.negative else y


MONOTONE = EnumeratorSpec(
    problem="monotone",
    precompute=monotone_precompute,
    first=lambda art: AugmentedSolution(monotone_first(art)),
    next=lambda art, aug: AugmentedSolution(monotone_next(art, aug.solution)),
    checker=_monotone_checker,
    size=lambda cs: cs.n,
    length=lambda inst: inst.n,
    order="lex-1<0",
    order_key=_dual_order,
)

IHS = EnumeratorSpec(
    problem="ihs",
    precompute=ihs_precompute,
    first=lambda art: AugmentedSolution(ihs_first(art)),
    next=lambda art, aug: AugmentedSolution(ihs_next(art, aug.solution)),
    checker=satisfies,
    size=lambda cs: cs.n,
    length=lambda inst: inst.n,
    order="lex-1<0",
    order_key=_dual_order,
)

KROM = EnumeratorSpec(
    problem="krom",
    precompute=krom_precompute,
    first=lambda art: AugmentedSolution(krom_first(art)),
    next=lambda art, aug: AugmentedSolution(krom_next(art, aug.solution)),
    present=lambda art, y: art.decode(y),
    checker=satisfies,
    size=lambda cs: cs.n,
    length=lambda inst: inst.n,
    order="lex-0<1",
)

XOR = EnumeratorSpec(
    problem="xor",
    precompute=xor_precompute,
    first=_xor_first,
    next=_xor_next,
    budget=constant(1),
    checker=xor_satisfies,
    size=lambda system: system.n,
    length=lambda inst: inst.n,
    order="gray-adjacent",
    order_key=lambda t, y: t.prefix(y),
)

__all__ = [
    "ClauseSet",
    "EVEN",
    "IHS",
    "IhsArtifact",
    "KROM",
    "KromArtifact",
    "MONOTONE",
    "MonotoneArtifact",
    "ODD",
    "TriangularSystem",
    "XOR",
    "XorSystem",
    "ihs_first",
    "ihs_next",
    "ihs_polarity",
    "ihs_precompute",
    "implication_graph",
    "krom_first",
    "krom_next",
    "krom_precompute",
    "monotone_first",
    "monotone_next",
    "monotone_polarity",
    "monotone_precompute",
    "satisfies",
    "xor_first",
    "xor_next",
    "xor_precompute",
    "xor_satisfies",
]
