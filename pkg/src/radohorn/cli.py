"""Command-line interface.

Every command reads a family document, runs one library operation and writes
a JSON report. Exit codes:

* 0: success, or a satisfiable verdict
* 1: unreadable input, schema errors, bad options or configuration
* 2: a negative verdict (violated, infeasible, degenerate, no witness)
* 3: an oracle budget was exceeded
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable
from enum import Enum
from pathlib import Path
from typing import Annotated, Final, NoReturn

import typer

from radohorn import __version__
from radohorn.config import CONFIG_ENV_VAR, MaximizerPolicy, Settings, load_settings
from radohorn.documents import (
    INFINITE_RATIO,
    FamilyDocument,
    ReportDocument,
    diagram_lines,
    id_annotations,
    load_family,
    load_partition,
    partition_section,
    ratio_text,
    validation_section,
)
from radohorn.exact_linalg import format_rational
from radohorn.exceptions import (
    ArgumentError,
    BudgetExceededError,
    ConfigurationError,
    DegenerateFamilyError,
    FamilyFormatError,
    NoWitnessError,
    RadoHornError,
    TransversalError,
)
from radohorn.family_partition import validate_ordered
from radohorn.fundamental import (
    chain_annotations,
    check_fundamental,
    construct_fundamental,
    find_transversal,
    transversal_chain,
)
from radohorn.oracle import Oracle
from radohorn.rado_horn import (
    generalized_check,
    partition_into_k,
    redundant_witness,
    require_clean,
    spanning_summary,
)

logger = logging.getLogger(__name__)

EXIT_OK: Final[int] = 0
EXIT_INPUT_ERROR: Final[int] = 1
EXIT_NEGATIVE: Final[int] = 2
EXIT_BUDGET: Final[int] = 3

app = typer.Typer(
    name="radohorn",
    help="Partition vector families into linearly independent sets, exactly.",
    no_args_is_help=True,
    add_completion=False,
)


class InputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class Maximizer(str, Enum):
    LARGEST = "largest"
    SMALLEST = "smallest"


InputOption = Annotated[
    str,
    typer.Option("--input", "-i", help="Family document (JSON or CSV); '-' reads stdin."),
]
OutputOption = Annotated[
    Path | None,
    typer.Option("--output", "-o", help="Report file (default: stdout)."),
]
FormatOption = Annotated[
    InputFormat | None,
    typer.Option("--format", "-f", help="Input format (default: by file suffix, else json)."),
]
RenderOption = Annotated[bool, typer.Option("--render", help="Include a Young diagram.")]
AsciiOption = Annotated[
    bool, typer.Option("--ascii-only", help="Draw diagrams with +, - and | only.")
]
KOption = Annotated[int, typer.Option("--k", "-k", help="Number of independent sets.")]


def configure_logging(verbose: int, quiet: bool) -> None:
    """Send log records to stderr; reports go to stdout or --output."""
    if quiet:
        level = logging.ERROR
    else:
        level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbose, 2)]
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _fail(message: str) -> NoReturn:
    typer.echo(f"error: {message}", err=True)
    raise typer.Exit(EXIT_INPUT_ERROR)


def _settings(ctx: typer.Context) -> Settings:
    settings = ctx.obj
    return settings if isinstance(settings, Settings) else load_settings()


def _read_family(source: str, fmt: InputFormat | None) -> FamilyDocument:
    if source == "-":
        text = typer.get_text_stream("stdin").read()
        chosen = fmt or InputFormat.JSON
    else:
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        chosen = fmt or (InputFormat.CSV if path.suffix.lower() == ".csv" else InputFormat.JSON)
    document = load_family(text, chosen.value)
    logger.info("read %d vectors of dimension %d", len(document.vectors), document.dimension)
    return document


def _write(report: ReportDocument, output: Path | None) -> None:
    text = report.to_json()
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        logger.info("wrote %s", output)


Handler = Callable[[FamilyDocument, ReportDocument], int]


def _run(
    command: str,
    source: str,
    output: Path | None,
    fmt: InputFormat | None,
    parameters: dict[str, object],
    handler: Handler,
) -> NoReturn:
    """Read the input, run ``handler`` and map the outcome to an exit code."""
    try:
        document = _read_family(source, fmt)
    except (FamilyFormatError, OSError, UnicodeDecodeError) as exc:
        _fail(str(exc))
    report = ReportDocument(command, document, parameters)
    try:
        code = handler(document, report)
    except DegenerateFamilyError as exc:
        report["verdict"] = "degenerate"
        report["zero_vectors"] = document.ids_of(exc.zero_indices)
        report["ratio"] = INFINITE_RATIO
        code = EXIT_NEGATIVE
    except BudgetExceededError as exc:
        report["verdict"] = "budget_exceeded"
        report["size"] = exc.size
        report["limit"] = exc.limit
        code = EXIT_BUDGET
    except (FamilyFormatError, ArgumentError, ConfigurationError, OSError) as exc:
        _fail(str(exc))
    _write(report, output)
    raise typer.Exit(code)


def _version(value: bool) -> None:
    if value:
        typer.echo(f"radohorn {__version__}")
        raise typer.Exit()


@app.callback()
def main_callback(
    ctx: typer.Context,
    config: Annotated[
        Path | None,
        typer.Option("--config", "-c", envvar=CONFIG_ENV_VAR, help="TOML settings file."),
    ] = None,
    maximizer: Annotated[
        Maximizer | None,
        typer.Option("--maximizer", help="Tie-break among maximizers."),
    ] = None,
    verbose: Annotated[
        int, typer.Option("--verbose", "-v", count=True, help="More logging (repeatable).")
    ] = 0,
    quiet: Annotated[bool, typer.Option("--quiet", "-q", help="Only log errors.")] = False,
    version: Annotated[
        bool | None,
        typer.Option("--version", callback=_version, is_eager=True, help="Show the version."),
    ] = None,
) -> None:
    """Exact Rado-Horn analysis of vector families."""
    configure_logging(verbose, quiet)
    try:
        settings = load_settings(config)
        if maximizer is not None:
            policy: MaximizerPolicy = (
                "largest" if maximizer is Maximizer.LARGEST else "smallest"
            )
            settings = settings.with_maximizer(policy)
    except (ConfigurationError, OSError) as exc:
        _fail(str(exc))
    ctx.obj = settings


@app.command()
def partition(
    ctx: typer.Context,
    source: InputOption,
    output: OutputOption = None,
    fmt: FormatOption = None,
    render: RenderOption = False,
    ascii_only: AsciiOption = False,
) -> None:
    """Print a fundamental partition and its profile."""
    settings = _settings(ctx)

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        fundamental, _ = construct_fundamental(document.to_family(), settings=settings)
        report["partition"] = partition_section(document, fundamental)
        if render:
            order = [sorted(block) for block in fundamental]
            report["diagram"] = diagram_lines(
                fundamental, id_annotations(document, order), ascii_only=ascii_only
            )
        return EXIT_OK

    _run("partition", source, output, fmt, {}, handle)


@app.command()
def analyze(
    ctx: typer.Context,
    source: InputOption,
    k: KOption,
    output: OutputOption = None,
    fmt: FormatOption = None,
) -> None:
    """Decide whether the family splits into K independent sets."""
    settings = _settings(ctx)
    if k < 1:
        _fail(f"--k must be at least 1, got {k}")

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        certificate = partition_into_k(document.to_family(), k, settings=settings)
        report["verdict"] = certificate.verdict.value
        if certificate.satisfiable:
            assert certificate.partition is not None
            report["partition"] = partition_section(document, certificate.partition)
            return EXIT_OK
        assert certificate.witness_subset is not None
        assert certificate.transversal is not None and certificate.anchor is not None
        decomposition = certificate.fail_decomposition()
        assert decomposition is not None
        report["witness"] = {
            "ids": document.ids_of(certificate.witness_subset),
            "ratio": ratio_text(certificate.ratio),
            "transversal": [document.ids_of(s) for s in certificate.transversal.slices],
            "anchor": document.id_of(certificate.anchor),
            "dimension": certificate.transversal_dim,
            "decomposition": {"k": decomposition[0], "excess": format_rational(decomposition[1])},
        }
        return EXIT_NEGATIVE

    _run("analyze", source, output, fmt, {"k": k}, handle)


@app.command()
def construct(
    ctx: typer.Context,
    source: InputOption,
    output: OutputOption = None,
    fmt: FormatOption = None,
    trace: Annotated[bool, typer.Option("--trace", help="Include every stage.")] = False,
    render: RenderOption = False,
    ascii_only: AsciiOption = False,
) -> None:
    """Run the staged construction and report its stages."""
    settings = _settings(ctx)

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        family = document.to_family()
        fundamental, stages = construct_fundamental(family, settings=settings)
        report["partition"] = partition_section(document, fundamental)
        report["stage_count"] = len(stages)
        if trace:
            report["stages"] = [
                {
                    "stage": stage.number,
                    "transversal": document.ids_of(stage.indices),
                    "slices": [document.ids_of(s) for s in stage.slices],
                    "t": stage.t,
                    "k": stage.k,
                    "s": stage.s,
                    "ratio": format_rational(stage.ratio),
                }
                for stage in stages.stages
            ]
            report["merges"] = [
                {
                    "stage": event.stage,
                    "absorbed": document.ids_of(event.absorbed),
                    "merged": document.ids_of(event.merged),
                    "ratio_before": format_rational(event.ratio_before),
                    "ratio_after": format_rational(event.ratio_after),
                }
                for event in stages.merges
            ]
            summary = spanning_summary(family, settings=settings)
            report["total_dimension"] = summary.total_dim
            report["max_spanning_sets"] = summary.max_spanning_sets
        if render:
            report["diagram"] = diagram_lines(
                fundamental, stages.annotations(fundamental), ascii_only=ascii_only
            )
        return EXIT_OK

    _run("construct", source, output, fmt, {"trace": trace}, handle)


@app.command()
def witness(
    ctx: typer.Context,
    source: InputOption,
    k: KOption,
    output: OutputOption = None,
    fmt: FormatOption = None,
    single_anchor: Annotated[
        bool, typer.Option("--single-anchor", help="Use one anchor instead of merging.")
    ] = False,
) -> None:
    """Explain why the family does not split into K independent sets."""
    settings = _settings(ctx)
    if k < 1:
        _fail(f"--k must be at least 1, got {k}")

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        merge = False if single_anchor else None
        try:
            found = redundant_witness(document.to_family(), k, merge=merge, settings=settings)
        except NoWitnessError as exc:
            report["verdict"] = "satisfiable"
            report["reason"] = str(exc)
            return EXIT_NEGATIVE
        report["verdict"] = "violated"
        report["blocks"] = [document.ids_of(block) for block in found.partition]
        report["subspace_basis"] = [
            [format_rational(c) for c in vector] for vector in found.subspace_basis
        ]
        report["transversal"] = [document.ids_of(s) for s in found.transversal]
        report["slices"] = [document.ids_of(s) for s in found.slices]
        report["saturated"] = document.ids_of(found.saturated_set)
        report["dimension"] = found.dimension
        report["ratio"] = format_rational(found.ratio)
        report["merged"] = found.merged
        spans, ratio, remainders = found.conditions
        report["conditions"] = {
            "equal_spans": spans,
            "ratio_exceeds_k": ratio,
            "remainders_independent": remainders,
        }
        return EXIT_OK

    _run("witness", source, output, fmt, {"k": k, "merge": not single_anchor}, handle)


@app.command()
def remove(
    ctx: typer.Context,
    source: InputOption,
    k: KOption,
    removals: Annotated[int, typer.Option("--l", "-l", help="Number of vectors to remove.")],
    output: OutputOption = None,
    fmt: FormatOption = None,
) -> None:
    """Decide whether removing L vectors leaves a family that splits into K independent sets."""
    settings = _settings(ctx)
    if k < 1:
        _fail(f"--k must be at least 1, got {k}")

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        outcome = generalized_check(document.to_family(), k, removals, settings=settings)
        report["verdict"] = outcome.verdict.value
        if outcome.feasible:
            assert outcome.removed is not None
            report["removed"] = document.ids_of(outcome.removed)
            return EXIT_OK
        assert outcome.witness is not None
        report["witness"] = {"ids": document.ids_of(outcome.witness), "ratio": ratio_text(outcome.ratio)}
        return EXIT_NEGATIVE

    _run("remove", source, output, fmt, {"k": k, "l": removals}, handle)


@app.command()
def oracle(
    ctx: typer.Context,
    source: InputOption,
    output: OutputOption = None,
    fmt: FormatOption = None,
) -> None:
    """Brute-force the partition count, fundamental profile and maximum ratio."""
    settings = _settings(ctx)

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        brute = Oracle(document.to_family(), settings.oracle)
        fundamental = brute.fundamental()
        subset, ratio = brute.max_ratio(settings.construction.maximizer)
        report["partition_count"] = brute.count_independent_partitions()
        report["fundamental"] = partition_section(document, fundamental)
        report["max_ratio"] = {"ids": document.ids_of(subset), "ratio": format_rational(ratio)}
        report["min_parts"] = len(fundamental)
        return EXIT_OK

    _run("oracle", source, output, fmt, {}, handle)


@app.command()
def transversal(
    ctx: typer.Context,
    source: InputOption,
    t: Annotated[int, typer.Option("--t", "-t", help="Number of leading blocks.")],
    anchor: Annotated[str, typer.Option("--anchor", "-a", help="Id of the anchor vector.")],
    output: OutputOption = None,
    fmt: FormatOption = None,
    render: RenderOption = False,
    ascii_only: AsciiOption = False,
) -> None:
    """Find a t-transversal of the fundamental partition through an anchor."""
    settings = _settings(ctx)

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        family = document.to_family()
        require_clean(family)
        anchor_index = document.index_of(anchor)
        fundamental, _ = construct_fundamental(family, settings=settings)
        report["partition"] = partition_section(document, fundamental)
        try:
            found = find_transversal(family, fundamental, t, anchor_index)
        except TransversalError as exc:
            report["verdict"] = "no_transversal"
            report["reason"] = str(exc)
            return EXIT_NEGATIVE
        report["verdict"] = "found"
        report["slices"] = [document.ids_of(s) for s in found.slices]
        report["dimension"] = found.dimension(family)
        if render:
            view, chain = transversal_chain(family, fundamental, t, anchor_index)
            order, labels = chain_annotations(chain, view)
            report["diagram"] = diagram_lines(view, labels, ascii_only=ascii_only)
            report["diagram_rows"] = [[document.id_of(i) for i in row] for row in order]
        return EXIT_OK

    _run("transversal", source, output, fmt, {"t": t, "anchor": anchor}, handle)


@app.command()
def validate(
    ctx: typer.Context,
    source: InputOption,
    partition_file: Annotated[
        Path | None,
        typer.Option("--partition", "-p", help="JSON list of id lists to check."),
    ] = None,
    output: OutputOption = None,
    fmt: FormatOption = None,
) -> None:
    """Check a family document and, optionally, a partition of it."""
    settings = _settings(ctx)

    def handle(document: FamilyDocument, report: ReportDocument) -> int:
        family = document.to_family()
        zeros = [entry.index for entry in family if entry.vector.is_zero()]
        report["zero_vectors"] = document.ids_of(zeros)
        if partition_file is None:
            report["valid"] = not zeros
            return EXIT_OK if not zeros else EXIT_NEGATIVE
        candidate = load_partition(partition_file.read_text(encoding="utf-8"), document)
        section = validation_section(validate_ordered(family, candidate))
        section["blocks"] = [document.ids_of(block) for block in candidate]
        if section["valid"]:
            check = check_fundamental(family, candidate, settings=settings)
            section["fundamental"] = check.is_fundamental
            section["method"] = check.method
        report["partition"] = section
        report["valid"] = bool(section["valid"]) and not zeros
        return EXIT_OK if report["valid"] else EXIT_NEGATIVE

    _run("validate", source, output, fmt, {}, handle)


def main() -> None:
    """Console entry point; usage errors exit with status 1.

    Status 2 is reserved for negative verdicts, so click's own usage-error
    status is remapped here.
    """
    command = typer.main.get_command(app)
    try:
        code = command.main(prog_name="radohorn", standalone_mode=False)
    except typer.Abort:
        typer.echo("Aborted!", err=True)
        code = EXIT_INPUT_ERROR
    except Exception as exc:
        # click usage errors; click may be vendored inside typer
        show = getattr(exc, "show", None)
        if isinstance(exc, RadoHornError) or not callable(show):
            raise
        show()
        code = EXIT_INPUT_ERROR
    sys.exit(code if isinstance(code, int) else EXIT_OK)


if __name__ == "__main__":
    main()
