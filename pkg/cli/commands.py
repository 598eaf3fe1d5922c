"""
Command-line front end for SymCover.

Every subcommand prints a human-readable summary on stdout and can write a
ReportDocument as JSON; count subcommands can also write the CSV table.
"""
import argparse
import logging
import math
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import ValidationError

from config.settings import SymCoverConfig, load_config
from counting_engine.growth_report import CountKind, growth_report
from data_management.report_writer import ReportWriter
from data_management.schemas import ConstantRecord, ReportDocument, constant_record, count_table, report_json_schema
from modular_fiber.fiber_decomposition import build_fiber_decomposition, fiber_cylinder_index
from modular_group.orbits import cusp_count_formula, cusp_decomposition, orbit_enumerate, torsion_points, unsigned_cusp_count
from siegel_veech.constants import Constant
from siegel_veech.cylinder_constants import (
    AreaMode, area_restricted_constant, generic_cylinder_constant, torsion_cylinder_constant, torsion_leaf_term,
)
from siegel_veech.saddle_constants import (
    SpinePart, SumConvention, cover_saddle_constant, d2_convergence_sequence, d2_limit,
    generic_cover_saddle_constant, m_homologous_finite, m_homologous_generic, saddle_torsion_constant,
)
from symmetric_surfaces.cylinder_decomposition import decompose_direction
from symmetric_surfaces.flow_tracer import trace_decompose
from symmetric_surfaces.surface_model import build, components, cone_data
from symmetric_surfaces.twist import parse_twist
from utils.errors import SymCoverError
from utils.helpers import fingerprint, format_fraction, parse_number_list
from utils.logger_config import setup_logging

logger = logging.getLogger(__name__)

DEFAULT_SCHEMA_PATH = "docs/report_document.schema.json"


def _direction(text: str):
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"Direction must look like 'p,q', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Direction must be two integers, got {text!r}") from e


def _class_filter(text: str) -> Optional[int]:
    if text == "all":
        return None
    if text.startswith("m="):
        try:
            return int(text[2:])
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"Filter must be 'all' or 'm=K', got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"Expected a rational number such as '1/3' or '0.25', got {text!r}") from e


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {text!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {value}")
    return value


def _t_list(text: str) -> List[float]:
    try:
        return parse_number_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


class CommandContext:
    """What a subcommand needs besides its arguments."""
    def __init__(self, args: argparse.Namespace, config: SymCoverConfig, argv: Sequence[str]):
        self.args = args
        self.config = config
        self.command = " ".join(["symcover", *argv])
        self.started = time.time()
        self.digits = config.reports.decimal_digits

    def decimal(self, value: float) -> str:
        return f"{value:.{self.digits}g}"

    def emit(self, text: str = "") -> None:
        print(text)

    def show_constant(self, label: str, constant: Constant) -> None:
        self.emit(f"{label}: {constant.render()}  [tag {constant.to_tag()}]  = {self.decimal(constant.value)}")

    def finish(self, parameters: Dict[str, Any], results: Optional[List[ConstantRecord]] = None,
               counts=None, rows: Optional[List[Dict[str, Any]]] = None) -> None:
        json_path = getattr(self.args, "json", None)
        if not json_path:
            return
        document = ReportDocument(command=self.command, parameters=parameters, results=results or [],
                                  counts=counts or [], rows=rows or [],
                                  elapsed_seconds=time.time() - self.started,
                                  fingerprint=fingerprint({"command": self.args.command, **parameters}))
        ReportWriter(self.config.reports.output_dir).write_json(document, json_path)


def _twist_parameters(args) -> Dict[str, Any]:
    return {"d": args.d, "twist": args.twist}


def cmd_surface_info(ctx: CommandContext) -> int:
    args = ctx.args
    twist = parse_twist(args.twist, args.d, exact=True if args.exact else None)
    surface = build(args.d, twist, ctx.config.counting.float_epsilon)
    index, on_boundary = fiber_cylinder_index(surface.twist, ctx.config.counting.float_epsilon)
    rows: Dict[str, Any] = {
        "d": surface.d,
        "twist": str(surface.twist),
        "exact": surface.exact,
        "degenerate": surface.degenerate,
        "fiber_cylinder": index,
        "on_fiber_boundary": on_boundary,
    }
    if surface.degenerate:
        structure = components(surface)
        rows.update(components=structure.components, component_area=structure.component_area,
                    horizontal_width=structure.horizontal_width, vertical_width=structure.vertical_width)
    else:
        cones = cone_data(surface)
        rows.update(genus=cones.genus, cone_points=cones.cone_points,
                    cone_angles=[f"{angle / math.pi:g}*pi" for angle in cones.cone_angles])
    if surface.exact:
        rows["order"] = surface.twist.order
        rows["orbit_size"] = len(orbit_enumerate(surface.twist.as_torus_point()))
    if surface.d == 1 and not surface.degenerate:
        ctx.emit("marked torus")
    for key, value in rows.items():
        ctx.emit(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    ctx.finish({**_twist_parameters(args), "exact": args.exact},
               rows=[{key: str(value) for key, value in rows.items()}])
    return 0


def _group_rows(decomposition) -> List[Dict[str, Any]]:
    return [{"count": g.count, "circumference": g.circumference, "width": g.width,
             "height": g.height, "band": str(g.band)} for g in decomposition.groups]


def cmd_decompose(ctx: CommandContext) -> int:
    args = ctx.args
    surface = build(args.d, parse_twist(args.twist, args.d), ctx.config.counting.float_epsilon)
    p, q = args.dir
    results = {}
    if args.oracle in ("formula", "both"):
        results["formula"] = decompose_direction(surface, p, q)
    if args.oracle in ("trace", "both"):
        results["trace"] = trace_decompose(surface, p, q)
    rows = []
    for name, decomposition in results.items():
        ctx.emit(f"{name}: {decomposition.describe()}")
        rows += [{"oracle": name, **row} for row in _group_rows(decomposition)]
    status = 0
    if args.oracle == "both":
        agree = results["formula"].matches(results["trace"])
        ctx.emit("MATCH" if agree else "MISMATCH")
        status = 0 if agree else 1
    ctx.finish({**_twist_parameters(args), "dir": f"{p},{q}", "oracle": args.oracle}, rows=rows)
    return status


def cmd_constants(ctx: CommandContext) -> int:
    args = ctx.args
    kind = args.kind
    records: List[ConstantRecord] = []
    rows: List[Dict[str, Any]] = []
    parameters: Dict[str, Any] = {"kind": kind}

    def report(label: str, constant: Constant, **extra) -> None:
        ctx.show_constant(label, constant)
        records.append(constant_record(label, constant, **extra))

    if kind == "generic":
        parameters["d"] = args.d
        report("generic", generic_cylinder_constant(args.d), d=args.d)
    elif kind == "torsion":
        _require(args.n, "--n")
        parameters.update(d=args.d, n=args.n, a=args.a)
        if args.a is not None:
            term = torsion_leaf_term(args.d, args.n, args.a)
            report(f"leaf a={args.a}", Constant(coefficient=term), d=args.d, n=args.n, a=args.a)
        else:
            report("torsion", torsion_cylinder_constant(args.d, args.n), d=args.d, n=args.n)
    elif kind == "saddle":
        parameters.update(d=args.d, n=args.n, convention=args.convention)
        if args.n is None:
            report("saddle generic", generic_cover_saddle_constant(args.d), d=args.d)
        else:
            convention = SumConvention(args.convention)
            report("saddle torsion", saddle_torsion_constant(args.n, convention), n=args.n)
            report("saddle cover", cover_saddle_constant(args.d, args.n, convention), d=args.d, n=args.n)
    elif kind == "mhom":
        _require(args.m, "--m")
        parameters.update(d=args.d, m=args.m, n=args.n)
        if args.n is None:
            report("m-homologous per chain", m_homologous_generic(args.d, args.m), d=args.d, m=args.m)
            report("m-homologous all connections", m_homologous_generic(args.d, args.m, per_chain=False),
                   d=args.d, m=args.m)
        else:
            report("m-homologous per chain", m_homologous_finite(args.d, args.n, args.m),
                   d=args.d, n=args.n, m=args.m)
    elif kind == "area":
        _require(args.i, "--i")
        low, high = args.low, args.high
        parameters.update(d=args.d, i=args.i, low=format_fraction(low), high=format_fraction(high), n=args.n)
        fiber = build_fiber_decomposition(args.d)
        if args.n is None:
            report("area restricted", area_restricted_constant(fiber, args.i, low, high), d=args.d, i=args.i)
        else:
            orbit = torsion_points(args.d, args.n)
            report("area restricted", area_restricted_constant(fiber, args.i, low, high, AreaMode.ORBIT, orbit),
                   d=args.d, i=args.i, n=args.n)
    elif kind == "cusps":
        _require(args.n, "--n")
        parameters["n"] = args.n
        orbit = torsion_points(1, args.n)
        signed = cusp_decomposition(orbit, identify_sign=True)
        unsigned = cusp_decomposition(orbit, identify_sign=False)
        formula = cusp_count_formula(args.n)
        ctx.emit(f"cusps (formula): {formula}")
        ctx.emit(f"cusps (enumerated, sign identified): {signed.total}  widths {signed.widths}")
        ctx.emit(f"cusps (enumerated, without sign): {unsigned.total}  formula {unsigned_cusp_count(args.n)}")
        records.append(constant_record("cusps", Constant(coefficient=formula), n=args.n))
        rows.append({"n": args.n, "formula": str(formula), "signed": signed.total,
                     "unsigned": unsigned.total, "convention": "sign identified"})
    ctx.finish(parameters, results=records, rows=rows)
    return 0


def _require(value, flag: str) -> None:
    if value is None:
        raise SymCoverError(f"{flag} is required here")


def cmd_count(ctx: CommandContext) -> int:
    args = ctx.args
    surface = build(args.d, parse_twist(args.twist, args.d), ctx.config.counting.float_epsilon)
    workers = args.workers if args.workers is not None else ctx.config.counting.workers
    if args.what == "cylinders":
        kind, m = CountKind.CYLINDERS, None
    else:
        m = args.filter
        kind = CountKind.SADDLES_ALL if m is None else CountKind.SADDLES_M_CLASS
    report = growth_report(surface, args.T_list, kind, m, workers, ctx.config.counting.rows_per_task)
    ctx.show_constant("predicted constant", report.constant)
    ctx.emit(report.to_frame().to_string(index=False))
    if args.csv:
        ReportWriter(ctx.config.reports.output_dir).write_csv(report, args.csv)
    ctx.finish({**_twist_parameters(args), "what": args.what, "T_list": args.T_list,
                "filter": "all" if m is None else f"m={m}"},
               results=[constant_record("predicted", report.constant)], counts=[count_table(report)])
    return 0


def cmd_convergence(ctx: CommandContext) -> int:
    args = ctx.args
    part = SpinePart(args.part)
    rows = d2_convergence_sequence(range(args.min_n, args.max_n + 1), part, d=args.d)
    limit = d2_limit()
    frame = pd.DataFrame([{"n": row.n, "branch": row.branch, "value": row.constant.value,
                           "gap": row.limit_gap} for row in rows])
    ctx.emit(frame.to_string(index=False))
    ctx.show_constant("limit", limit)
    ctx.finish({"d": args.d, "min_n": args.min_n, "max_n": args.max_n, "part": part.value},
               results=[constant_record(f"n={row.n}", row.constant, branch=row.branch) for row in rows]
               + [constant_record("limit", limit)])
    return 0


def cmd_schema(ctx: CommandContext) -> int:
    target = ReportWriter().write_schema(ctx.args.output)
    ctx.emit(f"schema written to {target}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symcover", description="d-symmetric torus covers: geometry, "
                                                                  "Siegel-Veech constants and counting.")
    parser.add_argument("--log-level", default=None, help="Overrides the configured logging level")
    parser.add_argument("--config", default=None, help="JSON configuration file")
    parser.add_argument("--seed", type=int, default=None, help="Seed recorded with randomized checks")
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("surface-info", help="Twist, genus, cone data and fiber position")
    info.add_argument("--d", type=int, required=True)
    info.add_argument("--twist", required=True)
    info.add_argument("--exact", action="store_true", help="Read decimals as exact rationals")
    info.add_argument("--json")
    info.set_defaults(handler=cmd_surface_info)

    decompose = sub.add_parser("decompose", help="Cylinder decomposition in a rational direction")
    decompose.add_argument("--d", type=int, required=True)
    decompose.add_argument("--twist", required=True)
    decompose.add_argument("--dir", type=_direction, required=True)
    decompose.add_argument("--oracle", choices=["formula", "trace", "both"], default="formula")
    decompose.add_argument("--json")
    decompose.set_defaults(handler=cmd_decompose)

    constants = sub.add_parser("constants", help="Closed-form constants")
    constants.add_argument("kind", choices=["generic", "torsion", "saddle", "mhom", "area", "cusps"])
    constants.add_argument("--d", type=int, default=1)
    constants.add_argument("--n", type=int)
    constants.add_argument("--m", type=int)
    constants.add_argument("--a", type=int, help="Single leaf index for torsion")
    constants.add_argument("--i", type=int, help="Fiber cylinder index for area")
    constants.add_argument("--low", type=_fraction, default="0", help="Lower transverse bound for area")
    constants.add_argument("--high", type=_fraction, default="1", help="Upper transverse bound for area")
    constants.add_argument("--convention", choices=[c.value for c in SumConvention],
                           default=SumConvention.ALL_COPRIME.value)
    constants.add_argument("--json")
    constants.set_defaults(handler=cmd_constants)

    count = sub.add_parser("count", help="Brute-force counts against predictions")
    count.add_argument("what", choices=["cylinders", "saddles"])
    count.add_argument("--d", type=int, required=True)
    count.add_argument("--twist", required=True)
    count.add_argument("--T-list", dest="T_list", type=_t_list, required=True)
    count.add_argument("--workers", type=_positive_int, default=None)
    count.add_argument("--filter", type=_class_filter, default=None, help="'all' or 'm=K'")
    count.add_argument("--csv")
    count.add_argument("--json")
    count.set_defaults(handler=cmd_count)

    convergence = sub.add_parser("convergence", help="d=2 class-1 saddle constants against 3 zeta(2)")
    convergence.add_argument("--d", type=int, default=2)
    convergence.add_argument("--max-n", type=int, required=True)
    convergence.add_argument("--min-n", type=int, default=3)
    convergence.add_argument("--part", choices=[p.value for p in SpinePart], default=SpinePart.BOTH.value)
    convergence.add_argument("--json")
    convergence.set_defaults(handler=cmd_convergence)

    schema = sub.add_parser("schema", help="Write the JSON schema of report documents")
    schema.add_argument("--output", default=DEFAULT_SCHEMA_PATH)
    schema.set_defaults(handler=cmd_schema)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        overrides = {"validation": {"seed": args.seed}} if args.seed is not None else None
        config = load_config(args.config, overrides)
        setup_logging(args.log_level or config.logging_config.level, config.logging_config.log_file)
        logger.info(f"Running '{args.command}' with seed {config.validation.seed}")
        return args.handler(CommandContext(args, config, argv))
    except (SymCoverError, ValidationError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
