"""CLI entry point for gradedSpectrumWorkbench."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional, Tuple, TypeVar, cast

import typer

from src.algebra.limits import SizeLimits
from src.config import Settings, load_settings
from src.config.settings import CONFIG_PATH_ENV
from src.graded.dump import dump_structure
from src.instances.builder import Instance, InstanceBuilder
from src.instances.catalog import all_specs
from src.instances.loader import FORMATS, emit_instance, load_instance, write_instance
from src.instances.models import InstanceSpec
from src.spectrum.spectrum import pseudo_spectrum
from src.topology.order import export_dot, render_dot, specialization_order
from src.topology.space import build_zariski
from src.verify.report import analysis_to_dict, failure_lines, render_machine, render_suite_machine
from src.verify.service import (
    FAIL,
    KNOWN_FAILURE,
    NOT_APPLICABLE,
    PASS,
    AnalysisReport,
    SuiteReport,
    VerificationService,
    VerifyOptions,
    analyze_instance,
)

APP_HELP = "Graded pseudo weakly prime spectra and their Zariski topology."

EXIT_FAILURE = 1
EXIT_INPUT = 2

app = typer.Typer(help=APP_HELP, no_args_is_help=True)
catalog_app = typer.Typer(help="Built-in and extra instances.", no_args_is_help=True)
app.add_typer(catalog_app, name="catalog", help="List and show catalog instances.")

CommandFunc = TypeVar("CommandFunc", bound=Callable[..., object])

Line = Tuple[str, Optional[str]]

_STATUS_COLOURS = {
    PASS: typer.colors.GREEN,
    FAIL: typer.colors.RED,
    NOT_APPLICABLE: typer.colors.YELLOW,
    KNOWN_FAILURE: typer.colors.MAGENTA,
}


def typer_callback(func: CommandFunc) -> CommandFunc:
    """Typed wrapper around the Typer callback decorator."""
    decorator: object = app.callback()
    return cast(Callable[[CommandFunc], CommandFunc], decorator)(func)


def typer_command(name: Optional[str] = None) -> Callable[[CommandFunc], CommandFunc]:
    """Typed wrapper around the Typer command decorator."""
    if name:
        decorator: object = app.command(name)
    else:
        decorator = app.command()
    return cast(Callable[[CommandFunc], CommandFunc], decorator)


def typer_catalog_command(name: Optional[str] = None) -> Callable[[CommandFunc], CommandFunc]:
    """Typed wrapper around the catalog subcommand decorator."""
    if name:
        decorator: object = catalog_app.command(name)
    else:
        decorator = catalog_app.command()
    return cast(Callable[[CommandFunc], CommandFunc], decorator)


@typer_callback
def cli(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(
        None,
        "--config",
        help="Path to a custom config file.",
        dir_okay=False,
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output."),
) -> None:
    """Graded pseudo weakly prime spectra and their Zariski topology."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    if config:
        if not config.exists():
            raise typer.BadParameter(f"Config file not found: {config}")
        os.environ[CONFIG_PATH_ENV] = str(config)
        ctx.obj["config_path"] = config
    _configure_logging(verbose)


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s")


def _fail(message: str, code: int = EXIT_FAILURE) -> NoReturn:
    typer.secho(message, fg=typer.colors.RED)
    raise typer.Exit(code=code)


def _load_settings() -> Settings:
    try:
        return load_settings()
    except Exception as exc:
        _fail(f"Failed to load settings: {exc}", EXIT_INPUT)


def _output_format(settings: Settings, requested: Optional[str]) -> str:
    chosen = requested or settings.output_format
    if chosen not in ("text", "machine"):
        _fail(f"Unknown output format '{chosen}'; expected text or machine.", EXIT_INPUT)
    return chosen


def _known_specs(settings: Settings) -> Dict[str, InstanceSpec]:
    try:
        return {spec.name: spec for spec in all_specs(settings.catalog_extra_dir)}
    except ValueError as exc:
        _fail(str(exc), EXIT_INPUT)


def _builder(settings: Settings, known: Dict[str, InstanceSpec], max_size: Optional[int]) -> InstanceBuilder:
    limits = SizeLimits.uniform(max_size) if max_size else settings.size_limits()
    return InstanceBuilder(limits=limits, axiom_scan_size=settings.axiom_scan_size, resolver=known.__getitem__)


def _build(builder: InstanceBuilder, spec: InstanceSpec) -> Instance:
    try:
        return builder.build(spec)
    except ValueError as exc:
        _fail(str(exc), EXIT_INPUT)
    except Exception as exc:
        _fail(f"Failed to build {spec.name}: {exc}")


def _resolve_instance(target: str, known: Dict[str, InstanceSpec], builder: InstanceBuilder) -> Instance:
    if target in known:
        return _build(builder, known[target])
    path = Path(target)
    if not path.exists():
        _fail(f"'{target}' is neither a catalog instance nor an instance file.", EXIT_INPUT)
    try:
        return load_instance(path, builder)
    except ValueError as exc:
        _fail(str(exc), EXIT_INPUT)
    except Exception as exc:
        _fail(f"Failed to build {path}: {exc}")


def _load_target(settings: Settings, target: str, max_size: Optional[int]) -> Instance:
    known = _known_specs(settings)
    return _resolve_instance(target, known, _builder(settings, known, max_size))


def _emit(lines: List[Line], output: Optional[Path]) -> None:
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text("".join(text + "\n" for text, _ in lines), encoding="utf-8")
        typer.secho(f"Wrote {output}", fg=typer.colors.GREEN, err=True)
        return
    for text, colour in lines:
        typer.secho(text, fg=colour)


def _emit_text(text: str, output: Optional[Path]) -> None:
    if output is None:
        typer.echo(text, nl=False)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    typer.secho(f"Wrote {output}", fg=typer.colors.GREEN, err=True)


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _analysis_lines(report: AnalysisReport) -> List[Line]:
    cyan = typer.colors.CYAN
    lines: List[Line] = [
        (f"Instance {report.instance}: {report.module} over {report.ring}", cyan),
        (f"|R| = {report.ring_size}, |M| = {report.module_size}, graded submodules: {report.lattice_size}", None),
        (f"Ann(M) = {report.annihilator}", None),
        ("Points of the spectrum (P -> (P : M)):", cyan),
    ]
    if not report.points:
        lines.append(("  (empty: M has no graded pseudo weakly prime submodules)", typer.colors.YELLOW))
    lines.extend((f"  {point} -> {colon}", None) for point, colon in report.points.items())
    lines.append(("Fibers:", cyan))
    lines.extend((f"  {colon}: {', '.join(points)}", None) for colon, points in report.fibers.items())
    lines.append((f"GSpec(R): {', '.join(report.gspec) or '-'}", None))
    lines.append((f"GWSpec(R): {', '.join(report.gwspec) or '-'}", None))
    lines.append(("Graded ideals (GSpec / GWSpec / colon of a point):", cyan))
    for row in report.ideal_table:
        marks = " / ".join(_flag(value) for value in (row.graded_prime, row.graded_weakly_prime, row.colon_of_point))
        lines.append((f"  {row.ideal}: {marks}", None))
    lines.append((f"GMax(M): {', '.join(report.gmax) or '-'}", None))
    lines.append(("Flags:", cyan))
    lines.extend((f"  {name}: {_flag(value)}", None) for name, value in report.flags.items())
    if report.space is None:
        lines.append((f"No Zariski topology: {report.topology_note}", typer.colors.YELLOW))
    else:
        lines.append(("Closed sets:", cyan))
        lines.extend(("  {" + ", ".join(closed) + "}", None) for closed in report.closed_sets)
    return lines


def _suite_lines(suite: SuiteReport) -> List[Line]:
    lines: List[Line] = []
    for report in suite.reports:
        lines.append((f"Instance {report.instance}:", typer.colors.CYAN))
        for result in report.results:
            label = {PASS: "[OK]", FAIL: "[FAIL]", NOT_APPLICABLE: "[N/A]", KNOWN_FAILURE: "[KNOWN]"}[result.status]
            text = f"{label} {result.theorem_id} ({result.seconds:.3f}s) {result.detail}".rstrip()
            if result.witness:
                text += f" [witness: {result.witness}]"
            lines.append((text, _STATUS_COLOURS[result.status]))
    counts = suite.counts
    summary = (
        f"Verification complete: {counts[PASS]} passed, {counts[FAIL]} failed, "
        f"{counts[NOT_APPLICABLE]} not applicable, {counts[KNOWN_FAILURE]} known counterexamples "
        f"across {len(suite.reports)} instances"
    )
    lines.append((summary, typer.colors.GREEN if suite.passed else typer.colors.RED))
    return lines


@typer_command()
def analyze(
    target: str = typer.Argument(..., help="Catalog name or instance file."),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or machine."),
    max_size: Optional[int] = typer.Option(None, "--max-size", min=1, help="Override the carrier size bounds."),
    dump: bool = typer.Option(False, "--dump", help="Also print the ring and module tables."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file."),
) -> None:
    """Show the spectrum, fibers, ideal comparison and flags of an instance."""
    settings = _load_settings()
    fmt = _output_format(settings, output_format)
    instance = _load_target(settings, target, max_size)
    bound = max_size or settings.max_module_size
    try:
        report = analyze_instance(instance, bound)
    except Exception as exc:
        _fail(f"Analysis of {instance.name} failed: {exc}")

    if fmt == "machine":
        _emit_text(render_machine(analysis_to_dict(report)), output)
        return
    lines = _analysis_lines(report)
    if dump:
        lines.extend((text, None) for text in dump_structure(instance.ring).splitlines())
        lines.extend((text, None) for text in dump_structure(instance.module).splitlines())
    _emit(lines, output)


@typer_command()
def verify(
    target: Optional[str] = typer.Argument(None, help="Catalog name or instance file."),
    all_instances: bool = typer.Option(False, "--all", help="Verify every catalog instance."),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or machine."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for sampled point subsets."),
    max_size: Optional[int] = typer.Option(None, "--max-size", min=1, help="Override the carrier size bounds."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file."),
) -> None:
    """Run the theorem suite on one instance or the whole catalog."""
    if bool(target) == all_instances:
        _fail("Pass exactly one of an instance or --all.", EXIT_INPUT)
    settings = _load_settings()
    fmt = _output_format(settings, output_format)
    known = _known_specs(settings)
    builder = _builder(settings, known, max_size)
    if all_instances:
        instances = [_build(builder, spec) for spec in known.values()]
    else:
        instances = [_resolve_instance(cast(str, target), known, builder)]

    options = VerifyOptions(
        seed=settings.seed if seed is None else seed,
        exhaustive_limit=settings.exhaustive_limit,
        sample_count=settings.sample_count,
        max_module_size=builder.limits.max_module_size,
        oracle_max_size=settings.oracle_max_size,
        subset_oracle_max_size=settings.subset_oracle_max_size,
    )
    suite = VerificationService(options).verify_all(instances)

    if fmt == "machine":
        _emit_text(render_suite_machine(suite), output)
    else:
        _emit(_suite_lines(suite), output)
    if not suite.passed:
        for line in failure_lines(suite):
            typer.secho(line, fg=typer.colors.RED, err=True)
        raise typer.Exit(code=EXIT_FAILURE)


@typer_command("export-dot")
def export_dot_command(
    target: str = typer.Argument(..., help="Catalog name or instance file."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the DOT graph to a file."),
    max_size: Optional[int] = typer.Option(None, "--max-size", min=1, help="Override the carrier size bounds."),
) -> None:
    """Emit the specialization order of the spectrum as a DOT graph."""
    settings = _load_settings()
    instance = _load_target(settings, target, max_size)
    try:
        spectrum = pseudo_spectrum(instance.module, max_size or settings.max_module_size)
        order = specialization_order(build_zariski(spectrum))
        if output is None:
            if not len(spectrum):
                raise ValueError(f"{instance.name} has an empty spectrum; nothing to export.")
            typer.echo(render_dot(order), nl=False)
            return
        export_dot(order, output)
    except ValueError as exc:
        _fail(str(exc), EXIT_INPUT)
    except Exception as exc:
        _fail(f"DOT export failed: {exc}")
    typer.secho(f"Wrote {output}", fg=typer.colors.GREEN, err=True)


@typer_catalog_command("list")
def catalog_list(ctx: typer.Context) -> None:
    """List catalog instances."""
    settings = _load_settings()
    verbose = bool(ctx.obj.get("verbose")) if ctx.obj else False
    for spec in _known_specs(settings).values():
        if verbose and spec.description:
            typer.echo(f"{spec.name} - {spec.description}")
        else:
            typer.echo(spec.name)


@typer_catalog_command("show")
def catalog_show(
    name: str = typer.Argument(..., help="Catalog instance name."),
    file_format: str = typer.Option("yaml", "--format", help="yaml or json."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the instance file."),
) -> None:
    """Print a catalog entry as an instance file."""
    if file_format not in FORMATS:
        _fail(f"Unknown instance format '{file_format}'; expected one of {', '.join(FORMATS)}.", EXIT_INPUT)
    settings = _load_settings()
    known = _known_specs(settings)
    if name not in known:
        _fail(f"No catalog instance named '{name}'.", EXIT_INPUT)
    if output is None:
        typer.echo(emit_instance(known[name], file_format), nl=False)
        return
    write_instance(known[name], output, file_format)
    typer.secho(f"Wrote {output}", fg=typer.colors.GREEN, err=True)


def main() -> None:
    """Run the CLI."""
    app()


if __name__ == "__main__":
    main()
