"""Verification reports and the exhaustiveness budget.

Every axiom checker returns a :class:`VerificationReport` instead of raising,
so that mutated or otherwise broken tables are first-class inputs.  A report
carries the first witness found for each violated axiom, scanning in
lexicographic tuple order so results are deterministic regardless of how the
scan is chunked across workers.

Exhaustive scans are capped by a tuple budget (default ``10**7``, overridable
through the ``POLYAD_BUDGET`` environment variable or per call).  Above the
budget a fixed-seed pseudo-random sample is checked instead and the report is
flagged ``sampled``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

DEFAULT_BUDGET = 10_000_000
SAMPLE_SEED = 0xC0FFEE
SAMPLE_COUNT = 100_000


def resolve_budget(budget: int | None) -> int:
    """Per-call budget, else POLYAD_BUDGET, else the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("POLYAD_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def sample_tuples(count: int, width: int, high: int) -> np.ndarray:
    """Deterministic (count, width) matrix of indices below ``high``."""
    rng = np.random.default_rng(SAMPLE_SEED)
    return rng.integers(0, high, size=(count, width), dtype=np.int64)


class Failure(NamedTuple):
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an axiom check: passed flag plus witnessed failures."""

    passed: bool
    failures: tuple[Failure, ...] = ()
    sampled: bool = False
    checked: int = 0

    def __post_init__(self):
        if self.passed != (len(self.failures) == 0):
            raise ValueError("passed flag inconsistent with failure list")

    @classmethod
    def ok(cls, checked: int = 0, sampled: bool = False) -> "VerificationReport":
        return cls(True, (), sampled, checked)

    @classmethod
    def fail(cls, failures, checked: int = 0, sampled: bool = False) -> "VerificationReport":
        fails = tuple(Failure(str(a), tuple(int(x) for x in w)) for a, w in failures)
        return cls(False, fails, sampled, checked)

    def first(self) -> Failure | None:
        return self.failures[0] if self.failures else None

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.passed and other.passed,
            self.failures + other.failures,
            self.sampled or other.sampled,
            self.checked + other.checked,
        )

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "sampled": self.sampled,
            "checked": int(self.checked),
            "failures": [
                {"axiom": f.axiom, "witness": [int(x) for x in f.witness]}
                for f in self.failures
            ],
        }


def merge_chunk_failures(chunks: list[dict[str, tuple[int, ...]]]) -> list[tuple[str, tuple[int, ...]]]:
    """Combine per-chunk {axiom: witness} maps, keeping the smallest witness."""
    best: dict[str, tuple[int, ...]] = {}
    order: list[str] = []
    for chunk in chunks:
        for axiom, witness in chunk.items():
            if axiom not in best:
                best[axiom] = witness
                order.append(axiom)
            elif witness < best[axiom]:
                best[axiom] = witness
    return [(a, best[a]) for a in sorted(order)]
