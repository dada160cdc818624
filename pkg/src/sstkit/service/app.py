"""FastAPI application exposing the toolkit over HTTP.

Every endpoint is a POST taking machines or instances in their text
format.  Malformed or inconsistent input comes back as a 400 with the
parser's message.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import ToolkitError
from ..formats import parse_hdt0l, parse_input_word, parse_sst, print_hdt0l, print_sst
from ..hdt0l import bounded_validity
from ..algebra import decide_hdt0l
from ..reductions import (
    bisst_to_hdt0l,
    check_diagonal,
    check_equivalent,
    check_functional,
    hdt0l_to_sst_pair,
)
from ..report import Report
from ..sst import copyless_violation, evaluate, product
from ..verdict import EngineConfig, Verdict
from .schemas import (
    DecideInstanceRequest,
    DecideMachineRequest,
    DecidePairRequest,
    EngineOptions,
    EvaluateRequest,
    EvaluateResponse,
    InstanceRequest,
    InstanceResponse,
    MachinePairRequest,
    MachinePairResponse,
    MachineRequest,
    MachineResponse,
    ReportResponse,
)


def _config(options: EngineOptions) -> EngineConfig:
    return EngineConfig(
        engine=options.engine, max_len=options.max_len, max_steps=options.max_steps
    )


def _budget(options: EngineOptions) -> dict[str, int]:
    if options.engine == "bounded":
        return {"max_len": options.max_len}
    return {"max_steps": options.max_steps}


def _report(task: str, verdict: Verdict, options: EngineOptions) -> ReportResponse:
    report = Report(
        task=task, verdict=verdict, engine=options.engine, budget=_budget(options)
    )
    return ReportResponse.from_report(report)


def create_app() -> FastAPI:
    app = FastAPI(
        title="sstkit",
        description="streaming string transducers and morphism sequence equivalence",
    )

    @app.exception_handler(ToolkitError)
    async def toolkit_error(_request: Request, exc: ToolkitError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.post("/evaluate", response_model=EvaluateResponse)
    def evaluate_route(body: EvaluateRequest) -> EvaluateResponse:
        machine = parse_sst(body.machine)
        word = parse_input_word(body.word, machine.input_alphabet)
        results = evaluate(machine, word)
        if machine.output_arity == 1:
            outputs = sorted(w.display() for w in results)
        else:
            outputs = sorted(f"{a.display()} | {b.display()}" for a, b in results)
        return EvaluateResponse(word=word.display(), outputs=outputs)

    @app.post("/copyless", response_model=ReportResponse)
    def copyless_route(body: MachineRequest) -> ReportResponse:
        machine = parse_sst(body.machine)
        witness = copyless_violation(machine)
        if witness is None:
            verdict = Verdict.holds(note="no update uses a register twice")
        else:
            t, register = witness
            verdict = Verdict.counterexample(
                note=(
                    f"register {register.token} appears twice in the update of "
                    f"transition {t.src} --{t.letter.token}--> {t.dst}"
                )
            )
        return ReportResponse.from_report(Report(task="copyless", verdict=verdict))

    @app.post("/product", response_model=MachineResponse)
    def product_route(body: MachinePairRequest) -> MachineResponse:
        left = parse_sst(body.left)
        right = parse_sst(body.right)
        return MachineResponse(machine=print_sst(product(left, right)))

    @app.post("/equivalence", response_model=ReportResponse)
    def equivalence_route(body: DecidePairRequest) -> ReportResponse:
        left = parse_sst(body.left)
        right = parse_sst(body.right)
        verdict = check_equivalent(left, right, _config(body))
        return _report("equivalence", verdict, body)

    @app.post("/functionality", response_model=ReportResponse)
    def functionality_route(body: DecideMachineRequest) -> ReportResponse:
        machine = parse_sst(body.machine)
        verdict = check_functional(machine, _config(body))
        return _report("functionality", verdict, body)

    @app.post("/diagonal", response_model=ReportResponse)
    def diagonal_route(body: DecideMachineRequest) -> ReportResponse:
        machine = parse_sst(body.machine)
        verdict = check_diagonal(machine, _config(body))
        return _report("diagonal", verdict, body)

    @app.post("/reduce/to-hdt0l", response_model=InstanceResponse)
    def reduce_to_hdt0l_route(body: MachineRequest) -> InstanceResponse:
        machine = parse_sst(body.machine)
        instance, _ = bisst_to_hdt0l(machine)
        return InstanceResponse(instance=print_hdt0l(instance))

    @app.post("/reduce/to-sst", response_model=MachinePairResponse)
    def reduce_to_sst_route(body: InstanceRequest) -> MachinePairResponse:
        instance = parse_hdt0l(body.instance)
        first, second = hdt0l_to_sst_pair(instance)
        return MachinePairResponse(first=print_sst(first), second=print_sst(second))

    @app.post("/hdt0l/decide", response_model=ReportResponse)
    def decide_route(body: DecideInstanceRequest) -> ReportResponse:
        instance = parse_hdt0l(body.instance)
        if body.engine == "bounded":
            verdict = bounded_validity(instance, max_len=body.max_len)
        else:
            verdict = decide_hdt0l(instance, max_steps=body.max_steps)
        return _report("hdt0l-validity", verdict, body)

    return app


app = create_app()
