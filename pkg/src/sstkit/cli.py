"""Command line front end.

Exit codes: 0 the property holds (or the requested artifact was produced),
1 a counterexample was found, 2 the engine hit its budget, 3 bad input.
"""

from __future__ import annotations

import json

import click

from .errors import ToolkitError
from .formats import parse_hdt0l, parse_input_word, parse_sst, print_hdt0l, print_sst
from .hdt0l import bounded_validity
from .algebra import decide_hdt0l
from .reductions import (
    bisst_to_hdt0l,
    check_diagonal,
    check_equivalent,
    check_functional,
    hdt0l_to_sst_pair,
)
from .report import Report
from .sst import copyless_violation, evaluate, product
from .verdict import EngineConfig, Verdict


class _Group(click.Group):
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ToolkitError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(3)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(3)


@click.group(cls=_Group)
@click.version_option(package_name="sstkit")
def main() -> None:
    """Streaming string transducers and morphism sequence equivalence."""


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


_engine_options = [
    click.option(
        "--engine",
        type=click.Choice(["bounded", "ideal"]),
        default="ideal",
        show_default=True,
        help="bounded: breadth-first search up to --max-len, refutation only; "
        "ideal: complete algebraic decision with a step cap.",
    ),
    click.option("--max-len", type=int, default=8, show_default=True),
    click.option("--max-steps", type=int, default=25, show_default=True),
    click.option("--json", "as_json", is_flag=True, help="machine readable output"),
]


def _with_engine(cmd):
    for option in reversed(_engine_options):
        cmd = option(cmd)
    return cmd


def _config(engine: str, max_len: int, max_steps: int) -> EngineConfig:
    return EngineConfig(engine=engine, max_len=max_len, max_steps=max_steps)


def _budget(config: EngineConfig) -> dict[str, int]:
    if config.engine == "bounded":
        return {"max_len": config.max_len}
    return {"max_steps": config.max_steps}


def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(report.to_dict(), indent=2))
    else:
        click.echo(report.to_text(), nl=False)
    raise SystemExit(report.exit_code)


@main.command("eval")
@click.argument("machine_file", type=click.Path())
@click.option("--word", "word_text", required=True, help="input word, ~ for empty")
@click.option("--json", "as_json", is_flag=True)
def eval_command(machine_file: str, word_text: str, as_json: bool) -> None:
    """Print every output of MACHINE_FILE on the given word."""
    machine = parse_sst(_read(machine_file))
    word = parse_input_word(word_text, machine.input_alphabet)
    results = evaluate(machine, word)
    if machine.output_arity == 1:
        shown = sorted(w.display() for w in results)
        payload = shown
    else:
        shown = sorted(f"{a.display()} | {b.display()}" for a, b in results)
        payload = shown
    if as_json:
        click.echo(json.dumps({"task": "evaluate", "word": word.display(), "outputs": payload}))
    else:
        if not shown:
            click.echo("no output: the word is outside the domain", err=True)
        for line in shown:
            click.echo(line)
    raise SystemExit(0)


@main.command()
@click.argument("machine_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
def copyless(machine_file: str, as_json: bool) -> None:
    """Check whether no update duplicates a register."""
    machine = parse_sst(_read(machine_file))
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
    _emit(Report(task="copyless", verdict=verdict), as_json)


@main.command()
@click.argument("left_file", type=click.Path())
@click.argument("right_file", type=click.Path())
@click.option("-o", "--out", "out_file", required=True, type=click.Path())
def product_command(left_file: str, right_file: str, out_file: str) -> None:
    """Write the synchronized product of two machines."""
    left = parse_sst(_read(left_file))
    right = parse_sst(_read(right_file))
    combined = product(left, right)
    _write(out_file, print_sst(combined))
    click.echo(f"wrote {out_file}")


@main.command()
@click.argument("left_file", type=click.Path())
@click.argument("right_file", type=click.Path())
@_with_engine
def equiv(
    left_file: str,
    right_file: str,
    engine: str,
    max_len: int,
    max_steps: int,
    as_json: bool,
) -> None:
    """Decide whether two deterministic machines define the same function."""
    left = parse_sst(_read(left_file))
    right = parse_sst(_read(right_file))
    config = _config(engine, max_len, max_steps)
    verdict = check_equivalent(left, right, config)
    _emit(
        Report(task="equivalence", verdict=verdict, engine=engine, budget=_budget(config)),
        as_json,
    )


@main.command()
@click.argument("machine_file", type=click.Path())
@_with_engine
def functional(
    machine_file: str, engine: str, max_len: int, max_steps: int, as_json: bool
) -> None:
    """Decide whether a machine outputs at most one word per input."""
    machine = parse_sst(_read(machine_file))
    config = _config(engine, max_len, max_steps)
    verdict = check_functional(machine, config)
    _emit(
        Report(task="functionality", verdict=verdict, engine=engine, budget=_budget(config)),
        as_json,
    )


@main.command()
@click.argument("machine_file", type=click.Path())
@_with_engine
def diagonal(
    machine_file: str, engine: str, max_len: int, max_steps: int, as_json: bool
) -> None:
    """Decide whether both tracks of a two-track machine always agree."""
    machine = parse_sst(_read(machine_file))
    config = _config(engine, max_len, max_steps)
    verdict = check_diagonal(machine, config)
    _emit(
        Report(task="diagonal", verdict=verdict, engine=engine, budget=_budget(config)),
        as_json,
    )


@main.group()
def reduce() -> None:
    """Translate between machines and morphism sequence instances."""


@reduce.command("to-hdt0l")
@click.argument("machine_file", type=click.Path())
@click.option("-o", "--out", "out_file", required=True, type=click.Path())
def reduce_to_hdt0l(machine_file: str, out_file: str) -> None:
    """Turn a two-track machine into a morphism sequence instance."""
    machine = parse_sst(_read(machine_file))
    instance, _ = bisst_to_hdt0l(machine)
    _write(out_file, print_hdt0l(instance))
    click.echo(f"wrote {out_file}")


@reduce.command("to-sst")
@click.argument("instance_file", type=click.Path())
@click.option(
    "-o",
    "--out",
    "out_files",
    required=True,
    nargs=2,
    type=click.Path(),
    help="two output paths, one machine per side",
)
def reduce_to_sst(instance_file: str, out_files: tuple[str, str]) -> None:
    """Turn an instance into two single-track machines, one per side."""
    instance = parse_hdt0l(_read(instance_file))
    first, second = hdt0l_to_sst_pair(instance)
    _write(out_files[0], print_sst(first))
    _write(out_files[1], print_sst(second))
    click.echo(f"wrote {out_files[0]} and {out_files[1]}")


@main.group()
def hdt0l() -> None:
    """Work with morphism sequence instances directly."""


@hdt0l.command("decide")
@click.argument("instance_file", type=click.Path())
@_with_engine
def hdt0l_decide(
    instance_file: str, engine: str, max_len: int, max_steps: int, as_json: bool
) -> None:
    """Decide validity: every label sequence derives an equal pair."""
    instance = parse_hdt0l(_read(instance_file))
    config = _config(engine, max_len, max_steps)
    if engine == "bounded":
        verdict = bounded_validity(instance, max_len=config.max_len)
    else:
        verdict = decide_hdt0l(instance, max_steps=config.max_steps)
    _emit(
        Report(task="hdt0l-validity", verdict=verdict, engine=engine, budget=_budget(config)),
        as_json,
    )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
