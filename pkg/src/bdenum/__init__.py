"""Bounded-delay enumeration: successor-style enumerators with precomputation and audited memory."""

from .bitword import BitWord
from .core import (
    AugmentedSolution,
    EnumerationResult,
    EnumeratorSpec,
    MemoryBudget,
    delay_profile,
    memory_audit,
    resume_equivalence_check,
    run_enumeration,
)
from .problems import PROBLEMS

__all__ = [
    "AugmentedSolution",
    "BitWord",
    "EnumerationResult",
    "EnumeratorSpec",
    "MemoryBudget",
    "PROBLEMS",
    "delay_profile",
    "memory_audit",
    "resume_equivalence_check",
    "run_enumeration",
]
