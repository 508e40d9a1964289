"""Acceptance criteria, one test per criterion.

Each test times itself and prints a single PASS/FAIL line (visible even
without ``-s``), then asserts, so a failing criterion is both reported and
red in the pytest summary.
"""

from __future__ import annotations

import random
import time

import pytest

from bdenum.bitword import BitWord
from bdenum.cli import main
from bdenum.core import memory_audit, resume_equivalence_check, run_enumeration
from bdenum.gray import (
    ORDERED,
    UNORDERED_FROM_RANK,
    UNORDERED_FROM_WORD,
    GrayInstance,
    gray_rank_from_word,
    gray_word_from_rank,
)
from bdenum.hypergraph import DOMINATING, TRANSVERSAL
from bdenum.oracle import verify_stream
from bdenum.problems import PROBLEMS
from bdenum.reach import REACH
from bdenum.sat import IHS, KROM, MONOTONE, XOR, ihs_polarity
from bdenum.witness import CONST, POLY, WitnessInstance, rl_membership, spec_for

from corpus import corpus
from instances import (
    bfs_layers,
    brute_cnf,
    brute_dominating,
    brute_transversals,
    brute_xor,
    dfs_reachable,
    gf2_rank,
    random_graph,
    random_hypergraph,
    random_ihs,
    random_krom,
    random_monotone,
    random_xor,
    reflected_gray,
    stateful_mutant,
    strs,
)

GOLDEN_N4 = [
    (0, "0000"), (1, "0001"), (2, "0011"), (3, "0010"),
    (4, "0110"), (5, "0111"), (6, "0101"), (7, "0100"),
    (8, "1100"), (9, "1101"), (10, "1111"), (11, "1110"),
    (12, "1010"), (13, "1011"), (14, "1001"), (15, "1000"),
]  # fmt: skip


@pytest.fixture
def report(capsys):
    """Print one verdict line per criterion and fail the test when it does not hold."""

    def _report(number: int, title: str, ok: bool, elapsed: float, limit: float | None, detail: str = ""):
        within = limit is None or elapsed < limit
        verdict = "PASS" if ok and within else "FAIL"
        budget = f" (limit {limit:g} s)" if limit is not None else ""
        line = f"[{verdict}] criterion {number:>2}: {title}; {elapsed:.4f} s{budget}"
        if detail:
            line += f"; {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, detail or title
        assert within, f"took {elapsed:.3f} s, limit {limit} s"

    return _report


def test_criterion_01_gray_golden_table(report):
    ORDERED.precompute(GrayInstance(4))  # warm import-time paths before timing
    start = time.perf_counter()
    result = run_enumeration(ORDERED, GrayInstance(4), check=False)
    elapsed = time.perf_counter() - start
    got = list(enumerate(strs(result)))
    report(1, "ordered Gray n=4 equals the 16-row table", got == GOLDEN_N4, elapsed, 1e-3)


def test_criterion_02_gray_properties(report):
    start = time.perf_counter()
    problems = []
    for n in range(1, 13):
        stream = strs(run_enumeration(ORDERED, GrayInstance(n), check=False))
        if stream != reflected_gray(n):
            problems.append(f"n={n}: stream differs from G^n")
        if len(set(stream)) != 2**n:
            problems.append(f"n={n}: {len(set(stream))} distinct words")
        for a, b in zip(stream, stream[1:]):
            if sum(x != y for x, y in zip(a, b)) != 1:
                problems.append(f"n={n}: {a}->{b} not adjacent")
                break
        for r in range(2**n):
            if gray_rank_from_word(gray_word_from_rank(n, r)) != r:
                problems.append(f"n={n}: rank {r} does not round-trip")
                break
        for v in range(2**n):
            w = BitWord(v, n)
            if gray_word_from_rank(n, gray_rank_from_word(w)) != w:
                problems.append(f"n={n}: word {w} does not round-trip")
                break
    elapsed = time.perf_counter() - start
    report(2, "ordered stream and rank/word inverses for n<=12", not problems, elapsed, 10, "; ".join(problems[:3]))


def test_criterion_03_unordered_coverage(report):
    start = time.perf_counter()
    problems = []
    for n in range(1, 11):
        code = reflected_gray(n)
        for r in range(2**n):
            expected = set(code[r:])
            got = strs(run_enumeration(UNORDERED_FROM_RANK, GrayInstance(n, rank=r), check=False))
            if set(got) != expected or len(got) != 2**n - r:
                problems.append(f"rank variant n={n} r={r}")
            x = BitWord.from_str(code[r])
            by_word = strs(run_enumeration(UNORDERED_FROM_WORD, GrayInstance(n, word=x), check=False))
            if sorted(by_word) != sorted(got):
                problems.append(f"word variant n={n} x={x}")
    elapsed = time.perf_counter() - start
    report(3, "unordered from rank/word cover the Gray suffix for n<=10", not problems, elapsed, 60, "; ".join(problems[:3]))


def _oracle_case(spec, instance, expected, order):
    result = run_enumeration(spec, instance, check=False)
    got = strs(result)
    if len(got) != len(set(got)):
        return "duplicate solution"
    if set(got) != expected:
        return f"set differs (got {len(set(got))}, want {len(expected)})"
    verdict = verify_stream(spec, instance, order)
    return None if verdict.ok else str(verdict)


def test_criterion_04_oracle_equivalence(report):
    rng = random.Random(4)
    per_problem = 110
    cases = {
        "transversal": lambda: (TRANSVERSAL, h := random_hypergraph(rng), brute_transversals(h.n, h.edges), "lex-1<0"),
        "dominating": lambda: (
            DOMINATING,
            g := random_graph(rng, source=False),
            brute_dominating(g.n, g.arcs),
            "lex-1<0",
        ),
        "monotone+": lambda: (MONOTONE, c := random_monotone(rng), brute_cnf(c.n, c.clauses), "lex-1<0"),
        "monotone-": lambda: (MONOTONE, c := random_monotone(rng, negative=True), brute_cnf(c.n, c.clauses), "lex-1<0"),
        "ihs+": lambda: (IHS, c := random_ihs(rng), brute_cnf(c.n, c.clauses), "lex-1<0"),
        "ihs-": lambda: (IHS, c := random_ihs(rng, negative=True), brute_cnf(c.n, c.clauses), "lex-1<0"),
        "krom": lambda: (KROM, c := random_krom(rng), brute_cnf(c.n, c.clauses), "lex-0<1"),
        "xor": lambda: (XOR, s := random_xor(rng), brute_xor(s.n, s.equations), "gray-adjacent"),
    }
    start = time.perf_counter()
    problems = []
    negative_ihs = 0
    for name, make in cases.items():
        for i in range(per_problem):
            spec, instance, expected, order = make()
            if name == "ihs-" and ihs_polarity(instance) == "negative":
                negative_ihs += 1
            failure = _oracle_case(spec, instance, expected, order)
            if failure:
                problems.append(f"{name} #{i}: {failure}")
    elapsed = time.perf_counter() - start
    detail = f"{per_problem} instances x {len(cases)} problem variants, {negative_ihs} genuinely negative IHS"
    if problems:
        detail = "; ".join(problems[:3])
    report(4, "streams equal brute force, no duplicates, declared order holds", not problems, elapsed, 300, detail)


def test_criterion_05_xor_count_law(report):
    rng = random.Random(5)
    start = time.perf_counter()
    problems = []
    for i in range(120):
        system = random_xor(rng, consistent=True)
        count = len(run_enumeration(XOR, system, check=False).solutions)
        want = 2 ** (system.n - gf2_rank(system.n, system.equations))
        if count != want:
            problems.append(f"#{i}: {count} != {want}")
    elapsed = time.perf_counter() - start
    report(5, "consistent XOR systems emit 2^(n-rank) solutions", not problems, elapsed, None, "; ".join(problems[:3]))


def test_criterion_06_memory_audits(report):
    rng = random.Random(6)
    start = time.perf_counter()
    problems = []

    def expect(label, spec, instance, check):
        bits = memory_audit(spec, instance)
        if not check(bits):
            problems.append(f"{label}: {bits} bits")

    for n in range(1, 9):
        expect(f"ordered Gray n={n}", ORDERED, GrayInstance(n), lambda b: b == 1)
        expect(f"unordered Gray n={n}", UNORDERED_FROM_RANK, GrayInstance(n, rank=1 % 2**n), lambda b: b == 0)
    for i in range(30):
        expect(f"xor #{i}", XOR, random_xor(rng, 10, consistent=True), lambda b: b == 1)
        expect(f"transversal #{i}", TRANSVERSAL, random_hypergraph(rng, 10), lambda b: b == 0)
        expect(f"monotone #{i}", MONOTONE, random_monotone(rng, 10, negative=i % 2 == 1), lambda b: b == 0)
        expect(f"ihs #{i}", IHS, random_ihs(rng, 10), lambda b: b == 0)
        expect(f"krom #{i}", KROM, random_krom(rng, 10), lambda b: b == 0)
        g = random_graph(rng, 20)
        expect(f"reach #{i}", REACH, g, lambda b, n=g.n: b <= 2 * n)
    for text in ("10", "101", "11110000", "1" * 17):
        expect(f"witness-const {text}", spec_for(CONST), WitnessInstance(BitWord.from_str(text), CONST), lambda b: b == 1)
    elapsed = time.perf_counter() - start
    report(6, "auxiliary memory matches each budget exactly", not problems, elapsed, None, "; ".join(problems[:3]))


def test_criterion_07_restart_equivalence(report):
    start = time.perf_counter()
    entries = corpus()
    problems = []
    checks = 0
    for label, spec, instance in entries:
        k = len(run_enumeration(spec, instance, check=False).solutions)
        for i in range(k + 1):
            checks += 1
            if not resume_equivalence_check(spec, instance, i):
                problems.append(f"{label} at {i}")
    covered = {label.split("/")[0] for label, _, _ in entries}
    if covered != set(PROBLEMS):
        problems.append(f"corpus misses {sorted(set(PROBLEMS) - covered)}")
    mutant_caught = any(not resume_equivalence_check(stateful_mutant(), 3, i) for i in range(1, 9))
    if not mutant_caught:
        problems.append("stateful mutant passed")
    elapsed = time.perf_counter() - start
    detail = f"{checks} resume points over {len(entries)} corpus instances, mutant rejected"
    report(7, "resuming from any emitted solution reproduces the suffix", not problems, elapsed, None,
           "; ".join(problems[:3]) or detail)  # fmt: skip


def _witness_case(x: BitWord, variant: str) -> str | None:
    inst = WitnessInstance(x, variant)
    stream = run_enumeration(spec_for(variant), inst, check=False).solutions
    m = inst.m
    last = stream[-1]
    want_last = BitWord.ones(m) if x.popcount() % 2 == 0 else BitWord.zeros(m)
    if last != want_last:
        return f"{variant} x={x}: final {last}"
    members = {BitWord(v, m) for v in range(2**m) if rl_membership(inst, BitWord(v, m))}
    if set(stream) != members or len(stream) != len(members):
        return f"{variant} x={x}: stream set differs from membership"
    return None


def test_criterion_08_witness_parity(report):
    rng = random.Random(8)
    start = time.perf_counter()
    problems = []
    inputs = 0
    for n in range(2, 65):
        xs = range(2**n) if n <= 12 else (rng.getrandbits(n) for _ in range(40))
        for v in xs:
            x = BitWord(v, n)
            inputs += 1
            for variant in (CONST, POLY):
                failure = _witness_case(x, variant)
                if failure:
                    problems.append(failure)
    elapsed = time.perf_counter() - start
    detail = f"{inputs} inputs, both variants"
    report(8, "final witness is 1^m exactly for even parity", not problems, elapsed, 30, "; ".join(problems[:3]) or detail)


def test_criterion_09_reachability(report):
    rng = random.Random(9)
    start = time.perf_counter()
    problems = []
    for i in range(120):
        g = random_graph(rng, 64, density=rng.choice((None, 0.02, 0.05)))
        emitted = [w.value for w in run_enumeration(REACH, g, check=False).solutions]
        if set(emitted) != dfs_reachable(g.n, g.arcs, g.source) or len(emitted) != len(set(emitted)):
            problems.append(f"#{i}: emission set differs")
            continue
        depth = bfs_layers(g.n, g.arcs, g.source)
        layers = [depth[v] for v in emitted]
        if layers != sorted(layers):
            problems.append(f"#{i}: layers {layers[:8]} decrease")
    elapsed = time.perf_counter() - start
    report(9, "reach stream equals the closure row, layer by layer", not problems, elapsed, 30, "; ".join(problems[:3]))


UNSAT_INPUTS = {
    "krom": ("unsat.cnf", "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n"),
    "xor": ("inconsistent.xor", "x 1 2 : 0\nx 1 2 : 1\n"),
    "ihs": ("empty.cnf", "p cnf 2 2\n1 0\n-1 0\n"),
}


def test_criterion_10_unsat_handling(report, tmp_path, capsys):
    start = time.perf_counter()
    problems = []
    for problem, (name, text) in UNSAT_INPUTS.items():
        path = tmp_path / name
        path.write_text(text)
        code = main(["enum", "--problem", problem, "--input", str(path)])
        out = capsys.readouterr().out
        if code != 0 or out != "# count=0\n":
            problems.append(f"{problem}: exit {code}, output {out!r}")
    elapsed = time.perf_counter() - start
    report(10, "UNSAT inputs print only '# count=0' and exit 0", not problems, elapsed, None, "; ".join(problems))
