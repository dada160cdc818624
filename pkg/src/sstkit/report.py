"""Uniform presentation of verdicts for the CLI and the HTTP service.

A report carries the task name, the verdict, and the engine budget that
produced it.  The JSON form and the text form state exactly the same
facts; exit codes follow the verdict kind: 0 holds, 1 counterexample,
2 resource limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .verdict import Verdict, VerdictKind
from .words import Word

EXIT_CODE = {
    VerdictKind.HOLDS: 0,
    VerdictKind.COUNTEREXAMPLE: 1,
    VerdictKind.RESOURCE_LIMIT: 2,
}


def word_text(word: Word) -> str:
    return word.display()


@dataclass
class Report:
    task: str
    verdict: Verdict
    engine: str | None = None
    budget: dict[str, int] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODE[self.verdict.kind]

    def to_dict(self) -> dict:
        v = self.verdict
        payload: dict = {"task": self.task, "verdict": v.kind.value}
        if self.engine is not None:
            payload["engine"] = self.engine
        if self.budget:
            payload["budget"] = dict(self.budget)
        if v.budget_used is not None:
            payload["budget_used"] = v.budget_used
        if v.note is not None:
            payload["note"] = v.note
        if v.word is not None:
            payload["word"] = word_text(v.word)
        if v.labels is not None:
            payload["labels"] = list(v.labels)
        if v.outputs is not None:
            payload["outputs"] = [word_text(w) for w in v.outputs]
        return payload

    def to_text(self) -> str:
        v = self.verdict
        lines = [f"{self.task}: {v.kind.value}"]
        if self.engine is not None:
            budget = ", ".join(f"{k}={n}" for k, n in self.budget.items())
            lines.append(f"engine: {self.engine}" + (f" ({budget})" if budget else ""))
        if v.budget_used is not None:
            lines.append(f"budget used: {v.budget_used}")
        if v.note is not None:
            lines.append(f"note: {v.note}")
        if v.word is not None:
            lines.append(f"word: {word_text(v.word)}")
        if v.labels is not None:
            lines.append("labels: " + (" ".join(v.labels) if v.labels else "(empty)"))
        if v.outputs is not None:
            first, second = v.outputs
            lines.append(f"first output: {word_text(first)}")
            lines.append(f"second output: {word_text(second)}")
        return "\n".join(lines) + "\n"
