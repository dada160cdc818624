"""Request and response bodies for the HTTP service.

Machines and instances travel in their text format; verdicts come back
with the same fields the CLI prints under --json.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..report import Report


class MachineRequest(BaseModel):
    machine: str = Field(description="machine in the text format")


class EvaluateRequest(MachineRequest):
    word: str = Field(description="input word; ~ for the empty word")


class MachinePairRequest(BaseModel):
    left: str
    right: str


class EngineOptions(BaseModel):
    engine: Literal["bounded", "ideal"] = "ideal"
    max_len: int = Field(default=8, ge=0)
    max_steps: int = Field(default=25, ge=1)


class DecideMachineRequest(MachineRequest, EngineOptions):
    pass


class DecidePairRequest(MachinePairRequest, EngineOptions):
    pass


class InstanceRequest(BaseModel):
    instance: str = Field(description="instance in the text format")


class DecideInstanceRequest(InstanceRequest, EngineOptions):
    pass


class EvaluateResponse(BaseModel):
    word: str
    outputs: list[str]


class ReportResponse(BaseModel):
    task: str
    verdict: Literal["holds", "counterexample", "resource-limit"]
    engine: str | None = None
    budget: dict[str, int] | None = None
    budget_used: int | None = None
    note: str | None = None
    word: str | None = None
    labels: list[str] | None = None
    outputs: list[str] | None = None

    @classmethod
    def from_report(cls, report: Report) -> "ReportResponse":
        return cls(**report.to_dict())


class MachineResponse(BaseModel):
    machine: str


class InstanceResponse(BaseModel):
    instance: str


class MachinePairResponse(BaseModel):
    first: str
    second: str
