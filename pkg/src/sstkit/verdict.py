"""Verdicts returned by every decision procedure in the package."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .words import Word


class VerdictKind(str, enum.Enum):
    HOLDS = "holds"
    COUNTEREXAMPLE = "counterexample"
    RESOURCE_LIMIT = "resource-limit"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check.

    ``word`` carries an input-word witness, ``labels`` a label-sequence
    witness; ``outputs`` holds the two differing derived words when the
    witness separates two behaviours.  ``budget_used`` reports how much of
    the caller's budget the engine consumed (search depth or chain steps).
    """

    kind: VerdictKind
    word: Word | None = None
    labels: tuple[str, ...] | None = None
    outputs: tuple[Word, Word] | None = None
    note: str | None = None
    budget_used: int | None = None

    @staticmethod
    def holds(note: str | None = None, budget_used: int | None = None) -> "Verdict":
        return Verdict(VerdictKind.HOLDS, note=note, budget_used=budget_used)

    @staticmethod
    def counterexample(
        word: Word | None = None,
        labels: tuple[str, ...] | None = None,
        outputs: tuple[Word, Word] | None = None,
        note: str | None = None,
        budget_used: int | None = None,
    ) -> "Verdict":
        return Verdict(
            VerdictKind.COUNTEREXAMPLE,
            word=word,
            labels=labels,
            outputs=outputs,
            note=note,
            budget_used=budget_used,
        )

    @staticmethod
    def resource_limit(note: str, budget_used: int | None = None) -> "Verdict":
        return Verdict(VerdictKind.RESOURCE_LIMIT, note=note, budget_used=budget_used)

    @property
    def is_holds(self) -> bool:
        return self.kind is VerdictKind.HOLDS

    @property
    def is_counterexample(self) -> bool:
        return self.kind is VerdictKind.COUNTEREXAMPLE

    @property
    def is_resource_limit(self) -> bool:
        return self.kind is VerdictKind.RESOURCE_LIMIT


@dataclass(frozen=True)
class EngineConfig:
    """Which validity engine to run and with what budget.

    ``bounded`` exhausts label sequences up to ``max_len`` and can only ever
    refute; ``ideal`` runs the complete algebraic chain with at most
    ``max_steps`` extension rounds.
    """

    engine: str = "ideal"
    max_len: int = 8
    max_steps: int = 25

    def __post_init__(self) -> None:
        if self.engine not in ("bounded", "ideal"):
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.max_len < 0:
            raise ValueError("max_len must be >= 0")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
