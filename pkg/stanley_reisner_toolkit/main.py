import argparse
import json
import sys
import time
from pathlib import Path
from threading import Event
from typing import Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from stanley_reisner_toolkit.betti_resolution import hochster_betti
from stanley_reisner_toolkit.claim_verifier_worker import ClaimVerifierWorker
from stanley_reisner_toolkit.claims import (
    EXAMPLE_BUILDERS,
    VerificationReport,
    build_example,
    claim_ids,
    claim_registry,
    get_claim,
    verify,
)
from stanley_reisner_toolkit.complex_core import (
    InvariantSummary,
    SimplicialComplex,
    format_degree,
    format_json,
    format_src,
    invariants,
    parse_complex_text,
    parse_inline_facets,
)
from stanley_reisner_toolkit.complex_core.src_format import DOCUMENT_SEPARATOR, dumps_many_json, to_schema
from stanley_reisner_toolkit.enumeration import EnumFilter, enumerate_complexes
from stanley_reisner_toolkit.field_linalg import FieldSpec
from stanley_reisner_toolkit.homology import HomologyProfile, reduced_homology
from stanley_reisner_toolkit.ring_props import RingStatus, ring_status
from stanley_reisner_toolkit.utils.errors import StanleyReisnerError
from stanley_reisner_toolkit.utils.guards import (
    DEFAULT_MAX_FAMILIES,
    DEFAULT_MAX_SUBSETS,
    DEFAULT_MAX_TURAN_SETS,
    MAX_FAMILIES_ENV,
    MAX_SUBSETS_ENV,
    resolve_cap,
)
from stanley_reisner_toolkit.utils.logger import logger, setup_logger
from stanley_reisner_toolkit.utils.schemas import (
    BettiTableSchema,
    ComplexSchema,
    ReproduceSummary,
)
from stanley_reisner_toolkit.utils.threadsafe_deque import ThreadSafeDeque

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent / "config" / "default.yaml"

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_USAGE = 4


class CliConfig(BaseModel):
    """Merged configuration: packaged defaults < YAML file < command-line flags."""

    model_config = ConfigDict(extra="allow")

    command: str
    logger_level: Literal["debug", "info", "warning", "error", "fatal"] = "info"
    field: str = "2"
    format: Literal["text", "json"] = "text"
    jobs: int = Field(default=1, ge=1)
    max_subsets: Optional[int] = Field(default=None, ge=1)
    max_families: Optional[int] = Field(default=None, ge=1)
    max_turan_sets: int = Field(default=DEFAULT_MAX_TURAN_SETS, ge=1)
    progress: bool = False
    verify_fields: Optional[List[str]] = None


class AnalyzeReport(BaseModel):
    complex: ComplexSchema
    invariants: InvariantSummary
    homology: HomologyProfile
    betti: BettiTableSchema
    ring: RingStatus


class UsageArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-y", "--yaml-config", type=str,
        help="Path to YAML configuration file",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "-l", "--logger-level",
        choices=["debug", "info", "warning", "fatal", "error"],
        help="Set the logger level",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "--field", type=str,
        help="Coefficient field: 2, 3, q or any prime",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "--format", choices=["text", "json"],
        help="Output format",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "--jobs", type=int,
        help="Worker processes for enumeration and Hochster sweeps",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "--max-subsets", type=int,
        help="Cap on the subsets a Hochster sweep may visit",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "--max-families", type=int,
        help="Cap on the families an enumeration may visit",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "--max-turan-sets", type=int,
        help="Cap on C(n,k) for the exact Turán search",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "--progress", action="store_true",
        help="Show progress bars on stderr",
        default=argparse.SUPPRESS
    )
    common.add_argument(
        "-o", "--output", type=str,
        help="Write data to this file instead of stdout",
        default=argparse.SUPPRESS
    )
    return common


def _complex_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "path", nargs="?",
        help="SRC v1 or JSON file, '-' for stdin",
        default=argparse.SUPPRESS
    )
    parser.add_argument(
        "--facets", type=str,
        help='Inline facets, e.g. "1 2 4; 1 3 5"',
        default=argparse.SUPPRESS
    )
    parser.add_argument(
        "--n", type=int,
        help="Number of vertices for --facets (default: largest vertex used)",
        default=argparse.SUPPRESS
    )


def parse_args(argv=None):
    common = _common_options()
    parser = UsageArgumentParser(
        description="stanley_reisner_toolkit",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="Invariants, homology, Betti table and ring status")
    _complex_input(analyze)
    analyze.add_argument(
        "--max-j", type=int,
        help="Only sweep restrictions of size at most this",
        default=argparse.SUPPRESS
    )

    dual = commands.add_parser("dual", parents=[common], help="Alexander dual")
    _complex_input(dual)

    enumerate_cmd = commands.add_parser("enumerate", parents=[common], help="Enumerate complexes on [n]")
    enumerate_cmd.add_argument("--n", type=int, required=True, help="Number of vertices")
    enumerate_cmd.add_argument("--dim-ring", type=int, default=argparse.SUPPRESS, help="Krull dimension d")
    enumerate_cmd.add_argument("--pure", action="store_true", default=argparse.SUPPRESS, help="Only pure complexes")
    enumerate_cmd.add_argument("--impure", action="store_true", default=argparse.SUPPRESS, help="Only non-pure complexes")
    enumerate_cmd.add_argument("--indeg", type=int, default=argparse.SUPPRESS, help="Exact initial degree")
    enumerate_cmd.add_argument("--rt-max", type=int, default=argparse.SUPPRESS, help="Upper bound on rt")
    enumerate_cmd.add_argument("--rt-exact", type=int, default=argparse.SUPPRESS, help="Exact rt")
    enumerate_cmd.add_argument("--e-min", type=int, default=argparse.SUPPRESS, help="Lower bound on e")
    enumerate_cmd.add_argument("--e-max", type=int, default=argparse.SUPPRESS, help="Upper bound on e")
    enumerate_cmd.add_argument("--mu-min", type=int, default=argparse.SUPPRESS, help="Lower bound on mu")
    enumerate_cmd.add_argument("--up-to-iso", action="store_true", default=argparse.SUPPRESS, help="One complex per isomorphism class")
    enumerate_cmd.add_argument("--any-vertex-set", action="store_true", default=argparse.SUPPRESS, help="Allow unused vertices")
    enumerate_cmd.add_argument("--count", action="store_true", default=argparse.SUPPRESS, help="Only print the number of complexes")

    verify_cmd = commands.add_parser("verify", parents=[common], help="Verify one claim")
    verify_cmd.add_argument("claim_id", help="Claim id, see 'claims'")
    for flag in ("--n-min", "--n-max", "--d-min", "--d-max", "--samples", "--seed"):
        verify_cmd.add_argument(flag, type=int, default=argparse.SUPPRESS)
    verify_cmd.add_argument("--fields", type=str, default=argparse.SUPPRESS, help="Comma separated, e.g. 2,3,q")

    commands.add_parser("claims", parents=[common], help="List the claim registry")

    reproduce = commands.add_parser("reproduce", parents=[common], help="Verify every claim at its default ranges")
    reproduce.add_argument("--claims", type=str, default=argparse.SUPPRESS, help="Comma separated subset of claim ids")
    reproduce.add_argument("--fields", type=str, default=argparse.SUPPRESS, help="Comma separated, e.g. 2,3,q")

    example = commands.add_parser("example", parents=[common], help="Build a named example complex")
    example.add_argument("example_id", choices=sorted(EXAMPLE_BUILDERS))
    example.add_argument(
        "--param", action="append", default=argparse.SUPPRESS,
        help="key=value, repeatable (e.g. --param c=2 --param d=3 --param e=5)"
    )

    return parser.parse_args(argv)


def load_config(args: argparse.Namespace) -> Dict:
    config_dict: Dict = {}
    with open(DEFAULT_CONFIG_PATH, "r") as file:
        config_dict.update(yaml.safe_load(file) or {})

    if hasattr(args, "yaml_config"):
        try:
            with open(args.yaml_config, "r") as file:
                yaml_config = yaml.safe_load(file)
                if yaml_config:
                    config_dict.update(yaml_config)
        except (OSError, yaml.YAMLError) as e:
            raise StanleyReisnerError(f"Failed to load YAML config file {args.yaml_config}: {e}") from e

    for key, value in vars(args).items():
        config_dict[key] = value

    # environment caps beat the files but not an explicit flag
    if not hasattr(args, "max_subsets"):
        config_dict["max_subsets"] = resolve_cap(
            None, MAX_SUBSETS_ENV, config_dict.get("max_subsets") or DEFAULT_MAX_SUBSETS
        )
    if not hasattr(args, "max_families"):
        config_dict["max_families"] = resolve_cap(
            None, MAX_FAMILIES_ENV, config_dict.get("max_families") or DEFAULT_MAX_FAMILIES
        )
    return config_dict


def _parse_fields(raw) -> Optional[List[FieldSpec]]:
    if raw is None:
        return None
    items = raw.split(",") if isinstance(raw, str) else raw
    return [FieldSpec.parse(item) for item in items if str(item).strip()]


def _read_complex(config: CliConfig) -> SimplicialComplex:
    extra = config.model_extra or {}
    if extra.get("facets") is not None:
        return parse_inline_facets(extra["facets"], extra.get("n"))
    path = extra.get("path")
    if path is None:
        raise StanleyReisnerError("give a file path, '-' for stdin, or --facets")
    if path == "-":
        return parse_complex_text(sys.stdin.read())
    with open(path, "r") as file:
        return parse_complex_text(file.read())


def _emit(config: CliConfig, text: str) -> None:
    output = (config.model_extra or {}).get("output")
    if output:
        with open(output, "w") as file:
            file.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def analyze_text(report: AnalyzeReport) -> str:
    inv = report.invariants
    lines = [
        f"n={inv.n} d={inv.dim_ring} c={inv.codim} e={inv.multiplicity} facets={inv.num_facets}",
        f"pure={_yes(inv.is_pure)} vertex_full={_yes(inv.vertex_full)} "
        f"indeg={format_degree(inv.indeg)} rt={format_degree(inv.rt)} mu={inv.mu} bight={inv.bight}",
        f"f-vector: {' '.join(str(f) for f in inv.f_vector)}",
        f"reduced homology over {report.homology.field.label}: "
        + " ".join(f"h~{k - 1}={b}" for k, b in enumerate(report.homology.betti_reduced)),
        f"Betti table over {report.betti.field} (reg={report.betti.regularity} pd={report.betti.projective_dimension}):",
    ]
    return "\n".join(lines) + "\n"


def cmd_analyze(config: CliConfig) -> int:
    cx = _read_complex(config)
    field = FieldSpec.parse(config.field)
    extra = config.model_extra or {}
    betti = hochster_betti(
        cx, field,
        max_j=extra.get("max_j"),
        max_subsets=config.max_subsets,
        jobs=config.jobs,
        progress=config.progress,
    )
    status = ring_status(cx, field)
    report = AnalyzeReport(
        complex=to_schema(cx),
        invariants=invariants(cx),
        homology=reduced_homology(cx, field),
        betti=betti.to_schema(),
        ring=status,
    )
    if config.format == "json":
        _emit(config, report.model_dump_json(indent=2) + "\n")
        return EXIT_OK
    text = analyze_text(report) + str(betti) + "\n"
    text += (
        f"CM={_yes(status.is_cm)} buchsbaum={_yes(status.is_buchsbaum)} "
        f"hypersurface={_yes(status.is_hypersurface)} reg={betti.regularity}\n"
    )
    if status.failing_witness is not None:
        w = status.failing_witness
        text += f"Reisner witness: link of {w.face} has h~{w.index} != 0\n"
    _emit(config, text)
    return EXIT_OK


def _write_complex(config: CliConfig, cx: SimplicialComplex) -> None:
    _emit(config, format_json(cx) + "\n" if config.format == "json" else format_src(cx))


def cmd_dual(config: CliConfig) -> int:
    _write_complex(config, _read_complex(config).alexander_dual())
    return EXIT_OK


def _enum_filter(config: CliConfig) -> EnumFilter:
    extra = config.model_extra or {}
    pure = None
    if extra.get("pure") and extra.get("impure"):
        raise StanleyReisnerError("--pure and --impure exclude each other")
    if extra.get("pure"):
        pure = True
    elif extra.get("impure"):
        pure = False
    try:
        return EnumFilter(
            n=extra["n"],
            require_vertex_full=not extra.get("any_vertex_set", False),
            dim_ring=extra.get("dim_ring"),
            pure=pure,
            indeg_exact=extra.get("indeg"),
            rt_max=extra.get("rt_max"),
            rt_exact=extra.get("rt_exact"),
            e_min=extra.get("e_min"),
            e_max=extra.get("e_max"),
            mu_min=extra.get("mu_min"),
            up_to_iso=extra.get("up_to_iso", False),
        )
    except ValidationError as exc:
        raise StanleyReisnerError(f"invalid filter: {exc.errors()[0]['msg']}") from None


def cmd_enumerate(config: CliConfig) -> int:
    flt = _enum_filter(config)
    stream = enumerate_complexes(
        flt, jobs=config.jobs, max_families=config.max_families, progress=config.progress,
    )
    if (config.model_extra or {}).get("count"):
        total = sum(1 for _ in stream)
        _emit(config, f"{total}\n")
        return EXIT_OK
    if config.format == "json":
        _emit(config, dumps_many_json(list(stream)) + "\n")
        return EXIT_OK
    chunks = []
    for index, cx in enumerate(stream):
        if index:
            chunks.append(f"{DOCUMENT_SEPARATOR}\n")
        chunks.append(format_src(cx))
    _emit(config, "".join(chunks))
    return EXIT_OK


def _report_exit(report: VerificationReport) -> int:
    if report.result == "PASS":
        return EXIT_OK
    if report.result == "COUNTEREXAMPLE":
        return EXIT_COUNTEREXAMPLE
    return EXIT_GUARD


def _selected_fields(config: CliConfig) -> Optional[List[FieldSpec]]:
    extra = config.model_extra or {}
    if extra.get("fields") is not None:
        return _parse_fields(extra["fields"])
    return _parse_fields(config.verify_fields)


def cmd_verify(config: CliConfig) -> int:
    extra = config.model_extra or {}
    claim_id = extra["claim_id"]
    get_claim(claim_id)
    ranges = {
        key: extra[key]
        for key in ("n_min", "n_max", "d_min", "d_max", "samples", "seed")
        if key in extra
    }
    report = verify(
        claim_id,
        ranges=ranges or None,
        fields=_selected_fields(config),
        jobs=config.jobs,
        max_families=config.max_families,
        max_turan_sets=config.max_turan_sets,
        progress=config.progress,
    )
    _emit(config, report.model_dump_json(indent=2) + "\n" if config.format == "json" else report.to_text())
    return _report_exit(report)


def cmd_claims(config: CliConfig) -> int:
    records = claim_registry()
    if config.format == "json":
        rows = [
            {
                "claim_id": r.claim_id,
                "group": r.group,
                "summary": r.summary,
                "anchor_label": r.anchor_label,
                "anchor": r.anchor,
                "fields": [f.label for f in r.fields],
                "default_range": r.default_range.model_dump(),
            }
            for r in records
        ]
        _emit(config, json.dumps(rows, indent=2) + "\n")
        return EXIT_OK
    width = max(len(r.claim_id) for r in records)
    lines = []
    for r in records:
        rng = r.default_range
        fields = ",".join(f.label for f in r.fields) or "any"
        lines.append(
            f"{r.claim_id:<{width}}  {r.group:<19}  n={rng.n_min}..{rng.n_max} d={rng.d_min}..{rng.d_max}"
            f"  [{fields}]  {r.summary}"
            f"\n{'':<{width}}  {r.anchor_label}: \"{r.anchor}\""
        )
    _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK


def summary_text(summary: ReproduceSummary) -> str:
    width = max((len(row.claim_id) for row in summary.rows), default=8)
    lines = [f"{'claim':<{width}}  {'group':<19}  {'result':<14}  {'instances':>9}  {'time':>8}"]
    for row in summary.rows:
        lines.append(
            f"{row.claim_id:<{width}}  {row.group:<19}  {row.result:<14}  "
            f"{row.instances_checked:>9}  {row.wall_time:>7.1f}s"
        )
    lines.append(
        f"{len(summary.rows)} claims: {summary.passed} PASS, "
        f"{summary.counterexamples} COUNTEREXAMPLE, {summary.skipped} SKIPPED"
    )
    return "\n".join(lines) + "\n"


def summarize(reports: List[VerificationReport]) -> ReproduceSummary:
    rows = [report.summary_row() for report in reports]
    return ReproduceSummary(
        rows=rows,
        passed=sum(1 for row in rows if row.result == "PASS"),
        counterexamples=sum(1 for row in rows if row.result == "COUNTEREXAMPLE"),
        skipped=sum(1 for row in rows if row.result == "SKIPPED"),
    )


def cmd_reproduce(config: CliConfig) -> int:
    extra = config.model_extra or {}
    selected = claim_ids()
    if extra.get("claims"):
        selected = [item.strip() for item in extra["claims"].split(",") if item.strip()]
        for claim_id in selected:
            get_claim(claim_id)

    stop_event = Event()
    claim_queue = ThreadSafeDeque()
    report_queue = ThreadSafeDeque()
    claim_queue.extend(selected)
    worker = ClaimVerifierWorker(
        stop_event=stop_event,
        claim_queue=claim_queue,
        report_queue=report_queue,
        fields=_selected_fields(config),
        jobs=config.jobs,
        max_families=config.max_families,
        max_turan_sets=config.max_turan_sets,
        progress=config.progress,
    )
    interrupted = False
    try:
        while not worker.run():
            time.sleep(1)
        while not worker.wait(1):
            pass
        worker.stop()
    except KeyboardInterrupt:
        interrupted = True
        stop_event.set()
        logger.warning("Interrupted; reporting the claims finished so far.")

    reports = report_queue.drain()
    summary = summarize(reports)
    if config.format == "json":
        _emit(config, summary.model_dump_json(indent=2) + "\n")
    else:
        _emit(config, summary_text(summary))
    if summary.counterexamples:
        return EXIT_COUNTEREXAMPLE
    if interrupted or summary.skipped or len(reports) < len(selected):
        return EXIT_GUARD
    return EXIT_OK


def _example_params(raw: Optional[List[str]]) -> Dict[str, int]:
    params = {}
    for item in raw or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise StanleyReisnerError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise StanleyReisnerError(f"--param {key}: {value!r} is not an integer") from None
    return params


def cmd_example(config: CliConfig) -> int:
    extra = config.model_extra or {}
    cx = build_example(extra["example_id"], **_example_params(extra.get("param")))
    _write_complex(config, cx)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "dual": cmd_dual,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "claims": cmd_claims,
    "reproduce": cmd_reproduce,
    "example": cmd_example,
}


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        config_dict = load_config(args)
        setup_logger(config_dict.get("logger_level", "info"))
        logger.info("Starting stanley_reisner_toolkit")
        for key, value in config_dict.items():
            logger.info(f"Config {key}: {value}")
        config = CliConfig.model_validate(config_dict)
        return COMMANDS[config.command](config)
    except ValidationError as exc:
        logger.error(f"Invalid configuration: {exc}")
        return EXIT_USAGE
    except StanleyReisnerError as exc:
        logger.error(str(exc))
        return exc.exit_code
    except OSError as exc:
        logger.error(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
