"""Regression corpus: instance files under tests/corpus plus generated Gray and witness parameters."""

from __future__ import annotations

import argparse
from pathlib import Path

from bdenum.bitword import BitWord
from bdenum.cli import build_instance
from bdenum.gray import GrayInstance, gray_word_from_rank
from bdenum.problems import PROBLEMS
from bdenum.witness import CONST, POLY, WitnessInstance

ROOT = Path(__file__).parent / "corpus"


def _file_entries():
    for path in sorted(ROOT.glob("*/*")):
        problem = PROBLEMS[path.parent.name]
        args = argparse.Namespace(input=str(path), n=None, rank=None, word=None, x=None)
        yield f"{path.parent.name}/{path.name}", problem.spec, build_instance(problem, args)


def _gray_entries():
    for n in range(1, 6):
        yield f"gray-lex/n{n}", PROBLEMS["gray-lex"].spec, GrayInstance(n)
        yield f"gray-ordered/n{n}", PROBLEMS["gray-ordered"].spec, GrayInstance(n)
        for r in sorted({0, 1, 2**n // 2, 2**n - 1}):
            word = gray_word_from_rank(n, r)
            yield f"gray-rank/n{n}r{r}", PROBLEMS["gray-rank"].spec, GrayInstance(n, rank=r)
            yield f"gray-ordered-rank/n{n}r{r}", PROBLEMS["gray-ordered-rank"].spec, GrayInstance(n, rank=r)
            yield f"gray-word/{word}", PROBLEMS["gray-word"].spec, GrayInstance(n, word=word)
            yield f"gray-ordered-word/{word}", PROBLEMS["gray-ordered-word"].spec, GrayInstance(n, word=word)


def _witness_entries():
    for text in ("10", "11", "101", "0110", "10011", "111111"):
        x = BitWord.from_str(text)
        yield f"witness-const/{text}", PROBLEMS["witness-const"].spec, WitnessInstance(x, CONST)
        yield f"witness-poly/{text}", PROBLEMS["witness-poly"].spec, WitnessInstance(x, POLY)


def corpus():
    """Every (label, spec, instance) triple in the regression corpus."""
    return [*_file_entries(), *_gray_entries(), *_witness_entries()]
