"""Command-line pipeline: parse, analyze, visualize, evaluate.

Artifacts land in a per-project workspace ``<out>/<project>/``: the code file
``<name>.code.xml``, the metrics file ``<name>.metrics.xml``, the evaluation
file ``<name>.eval.xml``, and the five visualization documents (four ``.dot``
files plus ``tagcloud.svg`` with its ``tagcloud.csv`` sidecar). Re-running a
command over unchanged inputs reproduces the artifacts byte for byte.

Exit codes: 0 success, 1 fatal I/O, 2 schema/validation failure, 3 parse
diagnostics under ``--strict``.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .analyzer import (
    compute_metrics,
    compute_package_metrics,
    evaluate,
    format_evaluation_table,
    metrics_file_bytes,
    write_evaluation_file,
)
from .model import CodeModel, ModelError
from .parser import ParseDiagnostic, SourceUnit, parse_project
from .visualizer import (
    emit_inheritance,
    emit_invocation,
    emit_organization,
    emit_polymetric,
    emit_tagcloud,
    tag_entries_csv,
)
from .xmlio import DEFAULT_ATTRIBUTION, SchemaError, read_code_file, write_code_file

EXIT_OK = 0
EXIT_IO = 1
EXIT_SCHEMA = 2
EXIT_STRICT = 3

COMMANDS = ("parse", "analyze", "visualize", "evaluate", "pipeline")


@dataclass
class RunConfig:
    command: str
    input_path: str
    output_dir: str = "out"
    project_name: str = ""  # defaults to the input directory name
    extensions: tuple[str, ...] = (".java",)
    attribution: str = DEFAULT_ATTRIBUTION
    strict: bool = False
    golden_path: str = ""
    quiet: bool = False

    def resolved_name(self) -> str:
        if self.project_name:
            return self.project_name
        name = Path(self.input_path).name
        for suffix in (".code.xml", ".xml"):
            if name.endswith(suffix):
                return name[: -len(suffix)]
        return name


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    try:
        return _dispatch(config)
    except _StrictFailure:
        return EXIT_STRICT
    except (SchemaError, ModelError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO


class _StrictFailure(Exception):
    pass


def _dispatch(config: RunConfig) -> int:
    workspace = Path(config.output_dir) / config.resolved_name()
    started = time.perf_counter()
    if config.command == "parse":
        _stage_parse(config, workspace)
    elif config.command == "analyze":
        model, units = _acquire_model(config)
        _stage_analyze(config, workspace, model, units)
    elif config.command == "visualize":
        model, units = _acquire_model(config)
        _stage_visualize(config, workspace, model, units)
    elif config.command == "evaluate":
        _stage_evaluate(config, workspace)
    elif config.command == "pipeline":
        stage_start = time.perf_counter()
        model, units = _stage_parse(config, workspace)
        _report(config, "parse", stage_start)
        stage_start = time.perf_counter()
        _stage_analyze(config, workspace, model, units)
        _report(config, "analyze", stage_start)
        stage_start = time.perf_counter()
        _stage_visualize(config, workspace, model, units)
        _report(config, "visualize", stage_start)
    else:
        raise ValueError(f"unknown command {config.command!r}")
    _report(config, config.command, started)
    return EXIT_OK


def _acquire_model(config: RunConfig) -> tuple[CodeModel, list[SourceUnit]]:
    """Model from a source directory (parse first) or from a code file."""
    path = Path(config.input_path)
    if path.is_dir():
        model, units, diagnostics = parse_project(
            path, config.resolved_name(), config.extensions
        )
        _handle_diagnostics(config, diagnostics)
        return model, units
    with open(path, "rb") as handle:
        return read_code_file(handle), []


def _stage_parse(config: RunConfig,
                 workspace: Path) -> tuple[CodeModel, list[SourceUnit]]:
    model, units, diagnostics = parse_project(
        config.input_path, config.resolved_name(), config.extensions
    )
    _handle_diagnostics(config, diagnostics)
    workspace.mkdir(parents=True, exist_ok=True)
    target = workspace / f"{config.resolved_name()}.code.xml"
    with open(target, "wb") as handle:
        write_code_file(model, handle, config.attribution)
    _info(config, f"wrote {target}")
    return model, units


def _stage_analyze(config: RunConfig, workspace: Path, model: CodeModel,
                   units: list[SourceUnit]) -> None:
    report = compute_metrics(model, units)
    if not report.loc_available:
        print("warning: LOC unavailable (model loaded from a code file; "
              "the format carries no line counts)", file=sys.stderr)
    workspace.mkdir(parents=True, exist_ok=True)
    target = workspace / f"{config.resolved_name()}.metrics.xml"
    target.write_bytes(metrics_file_bytes(report, config.attribution))
    _info(config, f"wrote {target}")


def _stage_visualize(config: RunConfig, workspace: Path, model: CodeModel,
                     units: list[SourceUnit]) -> None:
    documents = {
        "organization.dot": emit_organization(model).body,
        "inheritance.dot": emit_inheritance(model).body,
        "invocation.dot": emit_invocation(model).body,
        "polymetric.dot": emit_polymetric(
            compute_package_metrics(model, units)).body,
    }
    cloud, entries = emit_tagcloud(model)
    documents["tagcloud.svg"] = cloud.body
    documents["tagcloud.csv"] = tag_entries_csv(entries)
    workspace.mkdir(parents=True, exist_ok=True)
    for filename, body in documents.items():
        target = workspace / filename
        target.write_text(body, encoding="utf-8", newline="\n")
        _info(config, f"wrote {target}")


def _stage_evaluate(config: RunConfig, workspace: Path) -> None:
    extracted, _ = _acquire_model(config)
    golden_path = Path(config.golden_path)
    if golden_path.is_dir():
        golden, _, diags = parse_project(golden_path, "golden",
                                         config.extensions)
        _handle_diagnostics(config, diags)
    else:
        with open(golden_path, "rb") as handle:
            golden = read_code_file(handle)
    report = evaluate(extracted, golden)
    workspace.mkdir(parents=True, exist_ok=True)
    target = workspace / f"{config.resolved_name()}.eval.xml"
    with open(target, "wb") as handle:
        write_evaluation_file(report, handle, config.attribution)
    _info(config, f"wrote {target}")
    if not config.quiet:
        print(format_evaluation_table(report))


def _handle_diagnostics(config: RunConfig,
                        diagnostics: list[ParseDiagnostic]) -> None:
    for diag in diagnostics:
        print(f"{diag.file_path}:{diag.line}:{diag.column}: "
              f"{diag.severity}: {diag.message}", file=sys.stderr)
    if config.strict and diagnostics:
        print("error: parse diagnostics present and --strict is set",
              file=sys.stderr)
        raise _StrictFailure


def _info(config: RunConfig, message: str) -> None:
    if not config.quiet:
        print(message)


def _report(config: RunConfig, stage: str, started: float) -> None:
    if not config.quiet:
        elapsed = int((time.perf_counter() - started) * 1000)
        print(f"{stage} completed in {elapsed} ms")


def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="javamap",
        description="Parse, analyze, and visualize Java-syntax source code.",
    )
    sub = top.add_subparsers(dest="command", required=True)
    help_in = {
        "parse": "source directory",
        "analyze": "source directory or code file",
        "visualize": "source directory or code file",
        "evaluate": "extracted code file (or source directory)",
        "pipeline": "source directory",
    }
    for command in COMMANDS:
        sp = sub.add_parser(command)
        sp.add_argument("--in", dest="input_path", required=True,
                        help=help_in[command])
        sp.add_argument("--out", dest="output_dir", default="out",
                        help="workspace directory (default: out)")
        sp.add_argument("--name", dest="project_name", default="",
                        help="project name (default: input directory name)")
        sp.add_argument("--ext", dest="extensions", default=".java",
                        help="comma-separated source extensions")
        sp.add_argument("--strict", action="store_true",
                        help="fail (exit 3) on any parse diagnostic")
        sp.add_argument("--quiet", action="store_true",
                        help="suppress progress and timing output")
        sp.add_argument("--comment", dest="attribution",
                        default=DEFAULT_ATTRIBUTION,
                        help="attribution comment written into XML artifacts")
        if command == "evaluate":
            sp.add_argument("--golden", dest="golden_path", required=True,
                            help="golden code file (or source directory)")
    return top


def _parse_extensions(raw: str) -> tuple[str, ...]:
    parts = [part.strip() for part in raw.split(",") if part.strip()]
    return tuple(part if part.startswith(".") else f".{part}" for part in parts)


def main(argv: list[str] | None = None) -> int:
    args = _build_argparser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        input_path=args.input_path,
        output_dir=args.output_dir,
        project_name=args.project_name,
        extensions=_parse_extensions(args.extensions) or (".java",),
        attribution=args.attribution,
        strict=args.strict,
        golden_path=getattr(args, "golden_path", ""),
        quiet=args.quiet,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
