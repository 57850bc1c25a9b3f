"""
Command-line interface.

Exit codes: 0 success (or "entailed" / "satisfiable"), 1 negative verdict,
2 usage, parse, validation or resource errors. Diagnostics go to stderr;
stdout carries the report, or the JSON run report with `--json`.
"""

import hashlib
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import typer

from theorykit import __version__
from theorykit.core.errors import TheoryError, TheorySyntaxError
from theorykit.core.logging import configure_logging
from theorykit.dsl.document import TheoryDocument, dump_document
from theorykit.dsl.export import export_dot, export_horn_kb, export_json
from theorykit.dsl.parser import parse_formula, parse_theory
from theorykit.models.diagnostic import Diagnostic
from theorykit.models.formula import Formula, format_formula
from theorykit.models.schema import DiagnosticOut, RunReport
from theorykit.services.deduction.minimal import minimal_theory_indices
from theorykit.services.deduction.oracle import brute_force_entails, brute_force_satisfiable
from theorykit.services.deduction.resolution import entails
from theorykit.services.graphs.closure import format_matrix
from theorykit.services.graphs.synthesis import canonical_set

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

app = typer.Typer(
    name="theorykit",
    help="Check, query and synthesize theories written in the .thy language.",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

FILE_ARGUMENT = typer.Argument(..., help="Theory file (.thy)")
JSON_OPTION = typer.Option(False, "--json", help="Print the JSON run report instead of text")
NO_TIMING_OPTION = typer.Option(False, "--no-timing", help="Omit the timing line")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Debug logging and tracebacks")
MAX_CLAUSES_OPTION = typer.Option(None, "--max-clauses", min=1, help="Saturation clause cap")


@dataclass
class RunState:
    """Output collected by one subcommand."""

    command: str
    lines: List[str] = field(default_factory=list)
    diagnostics: List[Tuple[str, Diagnostic]] = field(default_factory=list)
    verdict: Any = None
    artifacts: Dict[str, Any] = field(default_factory=dict)

    def echo(self, line: str = "") -> None:
        self.lines.append(line)

    def error(self, message: str, origin: str) -> None:
        self.diagnostics.append((origin, Diagnostic.error(message)))


def _execute(
    command: str,
    path: Path,
    as_json: bool,
    no_timing: bool,
    verbose: bool,
    body: Callable[[TheoryDocument, RunState], int],
) -> None:
    """Load and parse the file, run the command body, print the report, exit."""
    configure_logging("DEBUG" if verbose else None)
    started = time.perf_counter()
    state = RunState(command)
    report = RunReport(command=command, tool_version=__version__)
    origin = str(path)
    code = EXIT_ERROR

    try:
        data = path.read_bytes()
    except OSError as exc:
        state.error(f"cannot read file: {exc.strerror or exc}", origin)
    else:
        report.input_digest = "sha256:" + hashlib.sha256(data).hexdigest()
        parsed = parse_theory(data)
        state.diagnostics.extend((origin, d) for d in parsed.diagnostics)
        if parsed.document is not None:
            try:
                code = body(parsed.document, state)
            except TheorySyntaxError as exc:
                state.diagnostics.extend(("query", d) for d in exc.diagnostics)
                code = EXIT_ERROR
            except (TheoryError, ValueError) as exc:
                logger.debug(f"{command} failed", exc_info=verbose)
                state.error(str(exc), origin)
                code = EXIT_ERROR

    elapsed_ms = (time.perf_counter() - started) * 1000

    for where, diagnostic in state.diagnostics:
        typer.echo(f"{where}:{diagnostic}", err=True)

    if as_json:
        report.verdict = state.verdict
        report.artifacts = state.artifacts
        report.diagnostics = [
            DiagnosticOut(severity=d.severity.value, message=d.message, line=d.line, column=d.column)
            for _, d in state.diagnostics
        ]
        report.timing_ms = None if no_timing else round(elapsed_ms, 3)
        typer.echo(report.model_dump_json(indent=2))
    else:
        for line in state.lines:
            typer.echo(line)
        if not no_timing:
            typer.echo(f"time: {elapsed_ms:.1f} ms")
    raise typer.Exit(code)


def _query(doc: TheoryDocument, text: str) -> Formula:
    return parse_formula(text, doc.language)


def _resolve_order(text: Optional[str], labels: Sequence[str]) -> Optional[List[int]]:
    """0-based visiting order from 1-based positions or identifiers; unlisted formulas follow in input order."""
    if text is None:
        return None
    order: List[int] = []
    for item in (part.strip() for part in text.split(",")):
        if not item:
            continue
        if item.isdigit():
            position = int(item) - 1
            if not 0 <= position < len(labels):
                raise ValueError(f"order position {item} is out of range 1..{len(labels)}")
        elif item in labels:
            position = labels.index(item)
        else:
            raise ValueError(f"unknown hypothesis in order: {item}")
        if position in order:
            raise ValueError(f"hypothesis {labels[position]} appears twice in the order")
        order.append(position)
    return order + [i for i in range(len(labels)) if i not in order]


def _write(text: str, out: str) -> None:
    if out == "-":
        typer.echo(text, nl=not text.endswith("\n"))
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


@app.command()
def check(
    file: Path = FILE_ARGUMENT,
    as_json: bool = JSON_OPTION,
    no_timing: bool = NO_TIMING_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Parse and validate a theory file."""

    def body(doc: TheoryDocument, state: RunState) -> int:
        lang = doc.language
        state.verdict = "valid"
        state.echo(
            f"valid: {len(lang.universes)} type(s), {len(lang.variables)} variable(s), "
            f"{len(doc.constructs)} construct(s), {len(doc.hypotheses)} hypothesis(es)")
        if lang.universes:
            state.echo(lang.summary())
        for h in doc.hypotheses:
            state.echo(f"{h.id}: {format_formula(h.formula)}")
        state.artifacts["document"] = dump_document(doc).model_dump()
        return EXIT_OK

    _execute("check", file, as_json, no_timing, verbose, body)


@app.command()
def entail(
    file: Path = FILE_ARGUMENT,
    query: str = typer.Option(..., "--query", "-q", help="Formula to test"),
    max_clauses: Optional[int] = MAX_CLAUSES_OPTION,
    as_json: bool = JSON_OPTION,
    no_timing: bool = NO_TIMING_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Decide whether the theory entails a formula by resolution."""

    def body(doc: TheoryDocument, state: RunState) -> int:
        formula = _query(doc, query)
        result = entails(doc.theory(), formula, max_clauses=max_clauses)
        refutation = result.refutation
        state.verdict = result.entailed
        state.artifacts["query"] = format_formula(formula)
        state.artifacts["trace"] = refutation.to_report().model_dump()
        if not result.entailed:
            state.echo("no")
            state.echo(
                f"saturated after {refutation.rounds} round(s) with {refutation.clause_count} clause(s); "
                f"no refutation of the negated query")
            return EXIT_NEGATIVE

        state.echo("yes")
        proof = refutation.proof_steps()
        inputs = len(refutation.theory.clauses)
        used = sorted({p for step in proof for p in step.parents if p < inputs})
        if not proof:
            used = [i for i, c in enumerate(refutation.theory.clauses) if c.is_empty][:1]
        for cid in used:
            state.echo(f"[{cid}] {refutation.theory.clause_text(refutation.clauses[cid])}  (input)")
        state.lines.extend(refutation.format_trace(proof))
        return EXIT_OK

    _execute("entail", file, as_json, no_timing, verbose, body)


@app.command()
def closure(
    file: Path = FILE_ARGUMENT,
    method: Optional[str] = typer.Option(None, "--method", help="matrix (default) or fw"),
    dot: Optional[Path] = typer.Option(None, "--dot", help="Write the closure graph as DOT"),
    matrix: bool = typer.Option(False, "--matrix", help="Also print the closure adjacency matrix"),
    as_json: bool = JSON_OPTION,
    no_timing: bool = NO_TIMING_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Print the implications derivable from an implication theory."""

    def body(doc: TheoryDocument, state: RunState) -> int:
        result = canonical_set(doc.theory(), labels=doc.labels(), method=method)
        state.diagnostics.extend((str(file), d) for d in result.diagnostics)
        derived = [format_formula(f) for f in result.derived]
        state.verdict = len(derived)
        state.artifacts["derived"] = derived
        state.artifacts["closure"] = [format_formula(f) for f in result.closure_theory]
        state.echo(f"derived {len(derived)} implication(s):")
        state.lines.extend(f"  {text}" for text in derived)
        if matrix:
            state.echo("closure matrix:")
            state.echo(format_matrix(result.closure.adjacency_matrix()))
        if dot is not None:
            _write(export_dot(result.closure), str(dot))
        return EXIT_OK

    _execute("closure", file, as_json, no_timing, verbose, body)


@app.command()
def reduce(
    file: Path = FILE_ARGUMENT,
    dot: Optional[Path] = typer.Option(None, "--dot", help="Write the reduction graph as DOT"),
    as_json: bool = JSON_OPTION,
    no_timing: bool = NO_TIMING_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Print the canonical set of an implication theory and the hypotheses it drops."""

    def body(doc: TheoryDocument, state: RunState) -> int:
        result = canonical_set(doc.theory(), labels=doc.labels())
        state.diagnostics.extend((str(file), d) for d in result.diagnostics)
        state.verdict = result.kept
        state.artifacts["kept"] = list(result.kept)
        state.artifacts["removed"] = [{"id": label, "reason": reason} for label, reason in result.removed]
        state.artifacts["minimal"] = [format_formula(f) for f in result.minimal]

        state.echo(f"kept {len(result.kept)} hypothesis(es):")
        for label in result.kept:
            hypothesis = doc.hypothesis(label)
            state.echo(f"  {label}: {format_formula(hypothesis.formula)}" if hypothesis else f"  {label}")
        state.echo(f"removed {len(result.removed)} hypothesis(es):")
        for label, reason in result.removed:
            state.echo(f"  {label} ({reason})")
        state.echo(f"canonical set ({len(result.minimal)}):")
        state.lines.extend(f"  {format_formula(f)}" for f in result.minimal)
        if dot is not None:
            _write(export_dot(result.reduction), str(dot))
        return EXIT_OK

    _execute("reduce", file, as_json, no_timing, verbose, body)


@app.command()
def minimize(
    file: Path = FILE_ARGUMENT,
    order: Optional[str] = typer.Option(
        None, "--order", help="Visiting order: 1-based positions or identifiers, comma separated"),
    max_clauses: Optional[int] = MAX_CLAUSES_OPTION,
    as_json: bool = JSON_OPTION,
    no_timing: bool = NO_TIMING_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Drop every hypothesis the remaining ones entail."""

    def body(doc: TheoryDocument, state: RunState) -> int:
        labels = doc.labels()
        kept = minimal_theory_indices(doc.theory(), _resolve_order(order, labels), max_clauses=max_clauses)
        removed = [labels[i] for i in range(len(labels)) if i not in kept]
        state.verdict = [labels[i] for i in kept]
        state.artifacts["kept"] = [labels[i] for i in kept]
        state.artifacts["removed"] = removed
        state.echo(f"kept {len(kept)} hypothesis(es):")
        for i in kept:
            state.echo(f"  {labels[i]}: {format_formula(doc.hypotheses[i].formula)}")
        state.echo(f"removed {len(removed)} hypothesis(es): {', '.join(removed)}" if removed
                   else "removed 0 hypothesis(es)")
        return EXIT_OK

    _execute("minimize", file, as_json, no_timing, verbose, body)


@app.command()
def export(
    file: Path = FILE_ARGUMENT,
    fmt: str = typer.Option(..., "--format", "-f", help="dot, kb or json"),
    out: str = typer.Option("-", "--out", "-o", help="Output path, - for stdout"),
    graph: str = typer.Option("base", "--graph", help="DOT graph: base, closure or reduction"),
    as_json: bool = JSON_OPTION,
    no_timing: bool = NO_TIMING_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Export the implication graph (DOT), a Horn knowledge base or the JSON document dump."""

    def body(doc: TheoryDocument, state: RunState) -> int:
        kind = fmt.strip().lower()
        if kind == "dot":
            result = canonical_set(doc.theory(), labels=doc.labels())
            graphs = {"base": result.graph, "closure": result.closure, "reduction": result.reduction}
            if graph not in graphs:
                raise ValueError(f"unknown graph {graph}; expected base, closure or reduction")
            text = export_dot(graphs[graph])
        elif kind == "kb":
            text = export_horn_kb(doc.theory())
        elif kind == "json":
            text = export_json(doc)
        else:
            raise ValueError(f"unknown export format {fmt}; expected dot, kb or json")
        state.verdict = kind
        state.artifacts["format"] = kind
        state.artifacts["out"] = out
        if as_json:
            state.artifacts["text"] = text
        elif out == "-":
            state.lines.extend(text.splitlines())
        if out != "-":
            _write(text, out)
        return EXIT_OK

    _execute("export", file, as_json, no_timing, verbose, body)


@app.command()
def oracle(
    file: Path = FILE_ARGUMENT,
    query: Optional[str] = typer.Option(None, "--query", "-q", help="Formula to test; omit for satisfiability"),
    as_json: bool = JSON_OPTION,
    no_timing: bool = NO_TIMING_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Truth-table verdict for entailment (or satisfiability without --query)."""

    def body(doc: TheoryDocument, state: RunState) -> int:
        if query is None:
            verdict = brute_force_satisfiable(doc.theory())
            state.echo("satisfiable" if verdict else "unsatisfiable")
        else:
            formula = _query(doc, query)
            verdict = brute_force_entails(doc.theory(), formula)
            state.artifacts["query"] = format_formula(formula)
            state.echo("yes" if verdict else "no")
        state.verdict = verdict
        return EXIT_OK if verdict else EXIT_NEGATIVE

    _execute("oracle", file, as_json, no_timing, verbose, body)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code."""
    try:
        app(args=list(argv) if argv is not None else None, prog_name="theorykit")
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    return EXIT_OK


def main() -> None:
    sys.exit(run())
