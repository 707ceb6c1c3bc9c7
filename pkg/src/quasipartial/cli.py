"""Command-line interface for quasipartial."""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

import numpy as np

from .classes import caratheodory_mixture, generate_member, membership_infimum, random_kernel
from .codec import (
    kernel_to_document,
    load_grid,
    load_kernel,
    load_series,
    params_to_document,
    series_to_document,
)
from .config import OUTPUT_FORMATS, RunConfig, load_config
from .errors import BracketError, InputFormatError, ParameterError, SeriesShapeError
from .lemmas import cosine_sum_min, estimate_best_constant, hull_membership_check
from .models import (
    ClassParams,
    CosineSumQuery,
    HullStatus,
    KernelSpec,
    NormalizedSeries,
    Taper,
    VerificationReport,
)
from .reports import dump_json, render_cosmin_csv, render_json, render_verification_csv, write_output
from .theorem import nonnegativity_threshold, sweep, theorem_bound, verify_theorem

log = logging.getLogger(__name__)

EXIT_FAIL = 1
EXIT_BRACKET = 2
EXIT_USAGE = 64
EXIT_INPUT = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _shared_options() -> dict[str, argparse.ArgumentParser]:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", type=Path, default=None, help="Write the report here (default: stdout)")
    output.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Report format")

    scan = argparse.ArgumentParser(add_help=False)
    scan.add_argument("--grid-size", type=int, default=None, help="Angles on the scan circle")
    scan.add_argument("--radius", type=float, default=None, help="Scan radius in (0, 1]")

    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--M", type=int, default=None, help="Truncation order")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--n", type=int, default=1, help="Salagean order n (default: 1)")
    params.add_argument("--alpha", type=float, default=1.0, help="alpha > 0 (default: 1)")
    params.add_argument("--beta", type=float, default=0.0, help="0 <= beta < 1 (default: 0)")
    params.add_argument("--c", type=float, default=0.0, help="Bernardi parameter, alpha + c > 0 (default: 0)")

    kernels = argparse.ArgumentParser(add_help=False)
    kernels.add_argument("--random", type=int, default=None, metavar="N", help="Use N seeded random kernels")
    kernels.add_argument("--seed", type=int, default=0, help="Seed for random kernels (default: 0)")
    kernels.add_argument("--taper", choices=[t.value for t in Taper], default=None, help="Kernel tail treatment")

    return {"output": output, "scan": scan, "order": order, "params": params, "kernels": kernels}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="quasipartial",
        description="Numerical checks for quasi-partial sums of the generalized Bernardi integral",
    )
    parser.add_argument(
        "--config", "-c",
        type=Path,
        default=None,
        help="Path to config YAML (default: ~/.config/quasipartial/config.yaml if present)",
    )
    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Enable verbose logging",
    )

    shared = _shared_options()
    output, scan, order, params, kernels = (
        shared["output"], shared["scan"], shared["order"], shared["params"], shared["kernels"],
    )
    groups = parser.add_subparsers(dest="group", required=True)

    lemma = groups.add_parser("lemma", help="Cosine sums, real-part bound, hull property")
    lemma_cmds = lemma.add_subparsers(dest="command", required=True)

    gasper = lemma_cmds.add_parser("gasper", parents=[output, scan], help="Estimate the best cosine-sum constant")
    gasper.add_argument("--lmax", type=int, default=200, help="Largest number of cosine terms (default: 200)")
    gasper.add_argument("--tol", dest="bisect_tol", type=float, default=1e-4, help="Final bracket width (default: 1e-4)")
    gasper.set_defaults(handler=_cmd_lemma_gasper)

    cosmin = lemma_cmds.add_parser("cosmin", parents=[output, scan], help="Minimize the cosine sum")
    cosmin.add_argument("--gamma", type=float, nargs="+", required=True, help="One or more gamma > -1")
    cosmin.add_argument("--lmax", type=int, default=200, help="Largest number of cosine terms (default: 200)")
    cosmin.set_defaults(handler=_cmd_lemma_cosmin)

    hull = lemma_cmds.add_parser(
        "hull", parents=[output, scan, kernels], help="Check that p*q stays in the hull of q"
    )
    hull.add_argument("q", type=Path, help="Series JSON for q")
    hull.add_argument("--p", type=Path, default=None, help="Series JSON for p (default: random mixtures)")
    hull.add_argument("--tol", type=float, default=None, help="Allowed distance outside the hull")
    hull.set_defaults(handler=_cmd_lemma_hull)

    classes = groups.add_parser("classes", help="Membership in T_n^alpha(beta)")
    classes_cmds = classes.add_subparsers(dest="command", required=True)

    check = classes_cmds.add_parser("check", parents=[output, scan, params], help="Test a series for membership")
    check.add_argument("input", type=Path, help="Series JSON for f(z)/z")
    check.add_argument("--tol", type=float, default=None, help="Membership tolerance")
    check.set_defaults(handler=_cmd_classes_check)

    generate = classes_cmds.add_parser("generate", parents=[order, params, kernels], help="Generate a class member")
    generate.add_argument("--kernel", type=Path, default=None, help="Kernel JSON (default: one random kernel)")
    generate.add_argument("--out", type=Path, default=None, help="Write the series here (default: stdout)")
    generate.set_defaults(handler=_cmd_classes_generate)

    theorem = groups.add_parser("theorem", help="Lower bound for quasi-partial sums")
    theorem_cmds = theorem.add_subparsers(dest="command", required=True)

    bound = theorem_cmds.add_parser("bound", parents=[output, params], help="Evaluate the lower bound")
    bound.set_defaults(handler=_cmd_theorem_bound)

    verify = theorem_cmds.add_parser(
        "verify", parents=[output, scan, order, params, kernels], help="Check the bound on given inputs"
    )
    verify.add_argument("--m", type=int, required=True, help="Quasi-partial sum index, m >= 2")
    verify.add_argument("--kernel", type=Path, default=None, help="Kernel JSON for one generated member")
    verify.add_argument("--series", type=Path, default=None, help="Series JSON for f(z)/z")
    verify.add_argument("--tol", type=float, default=None, help="Margin tolerance")
    verify.set_defaults(handler=_cmd_theorem_verify)

    grid = theorem_cmds.add_parser("sweep", parents=[output, scan, order], help="Check the bound over a grid")
    grid.add_argument("grid", type=Path, help="Sweep grid JSON")
    grid.add_argument("--tol", type=float, default=None, help="Margin tolerance")
    grid.add_argument("--taper", choices=[t.value for t in Taper], default=None, help="Kernel tail treatment")
    grid.add_argument("--workers", type=int, default=None, help="Worker threads")
    grid.set_defaults(handler=_cmd_theorem_sweep)

    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Config file values, overridden by whichever flags were given."""
    config = load_config(args.config)
    flags = {
        "tol": "tol",
        "M": "M",
        "output_path": "out",
        "output_format": "format",
        "taper": "taper",
        "workers": "workers",
    }
    overrides = {
        key: getattr(args, flag) for key, flag in flags.items() if getattr(args, flag, None) is not None
    }
    scan = {
        key: getattr(args, key) for key in ("grid_size", "radius") if getattr(args, key, None) is not None
    }
    if scan:
        overrides["scan"] = dataclasses.replace(config.scan, **scan)
    return dataclasses.replace(config, **overrides) if overrides else config


def _params(args: argparse.Namespace) -> ClassParams:
    return ClassParams(n=args.n, alpha=args.alpha, beta=args.beta, c=args.c)


def _command(args: argparse.Namespace) -> dict:
    """The subcommand and its parsed flags, as embedded in JSON reports."""
    skip = {"config", "verbose", "handler", "group", "command"}
    flags = {key: value for key, value in sorted(vars(args).items()) if key not in skip}
    return {"name": f"{args.group} {args.command}", "flags": flags}


def _emit(args: argparse.Namespace, config: RunConfig, result: object, table: str | None = None) -> None:
    if config.output_format == "csv":
        if table is not None:
            write_output(table, config.output_path)
            return
        log.warning("This report has no CSV form; writing JSON")
    write_output(render_json(result, {**config.as_dict(), "command": _command(args)}), config.output_path)


def _summary(reports: list[VerificationReport]) -> dict[str, int]:
    applicable = [r for r in reports if r.applicable]
    return {
        "passed": sum(1 for r in applicable if r.passed),
        "applicable": len(applicable),
        "total": len(reports),
    }


def _random_count(args: argparse.Namespace) -> int:
    count = 1 if args.random is None else args.random
    if count < 1:
        raise ParameterError(f"--random must be >= 1, got {count}")
    return count


def _kernels(args: argparse.Namespace) -> list[KernelSpec]:
    if args.kernel is not None:
        return [load_kernel(args.kernel)]
    rng = np.random.default_rng(args.seed)
    return [random_kernel(rng) for _ in range(_random_count(args))]


def _members(
    args: argparse.Namespace, params: ClassParams, config: RunConfig
) -> tuple[list[KernelSpec], list[NormalizedSeries]]:
    """Input series for a command, with the kernels that generated them (none for --series)."""
    if getattr(args, "series", None) is not None:
        return [], [load_series(args.series)]
    kernels = _kernels(args)
    return kernels, [generate_member(spec, params, config.M, config.taper) for spec in kernels]


def _cmd_lemma_gasper(args: argparse.Namespace, config: RunConfig) -> int:
    if args.lmax < 1:
        raise ParameterError(f"--lmax must be >= 1, got {args.lmax}")
    _emit(args, config, estimate_best_constant(args.lmax, args.bisect_tol, config.scan))
    return 0


def _cmd_lemma_cosmin(args: argparse.Namespace, config: RunConfig) -> int:
    for gamma in args.gamma:
        CosineSumQuery(gamma, args.lmax)
    rows = [(gamma, cosine_sum_min(gamma, args.lmax, config.scan)) for gamma in args.gamma]
    result = [
        {"gamma": gamma, "min": found.value, "argmin_l": found.l, "argmin_theta": found.theta}
        for gamma, found in rows
    ]
    _emit(args, config, result, render_cosmin_csv(rows))
    return 0


def _cmd_lemma_hull(args: argparse.Namespace, config: RunConfig) -> int:
    q = load_series(args.q)
    if args.p is not None:
        candidates = [load_series(args.p)]
    else:
        # p = (1 + h)/2 has Re p >= 1/2 whenever Re h >= 0
        rng = np.random.default_rng(args.seed)
        candidates = [
            NormalizedSeries(q.M, caratheodory_mixture(random_kernel(rng), q.M, config.taper).coeffs / 2.0)
            for _ in range(_random_count(args))
        ]
    reports = [hull_membership_check(p, q, config.scan, config.tol) for p in candidates]
    for i, report in enumerate(reports):
        if report.status is HullStatus.VACUOUS:
            log.warning("pair %d: min Re p = %.6g < 1/2, check is vacuous", i, report.p_min_re)
    _emit(args, config, reports)
    return EXIT_FAIL if any(r.status is HullStatus.FAIL for r in reports) else 0


def _cmd_classes_check(args: argparse.Namespace, config: RunConfig) -> int:
    params = _params(args)
    f = load_series(args.input)
    scan = config.scan if args.radius is not None else config.member_scan
    report = membership_infimum(f, params, scan, config.tol)
    _emit(args, config, {"params": params, "membership": report})
    return 0 if report.is_member else EXIT_FAIL


def _cmd_classes_generate(args: argparse.Namespace, config: RunConfig) -> int:
    _, members = _members(args, _params(args), config)
    write_output(dump_json(series_to_document(members[0])), config.output_path)
    return 0


def _cmd_theorem_bound(args: argparse.Namespace, config: RunConfig) -> int:
    params = _params(args)
    value = theorem_bound(params)
    _emit(args, config, {
        "params": params,
        "bound": value,
        "bound_nonnegative": value >= 0,
        "nonnegativity_threshold": nonnegativity_threshold(params),
        "hypothesis_ok": params.hypothesis_ok,
    })
    return 0


def _cmd_theorem_verify(args: argparse.Namespace, config: RunConfig) -> int:
    params = _params(args)
    if args.m < 2:
        raise ParameterError(f"--m must be >= 2, got {args.m}")
    kernels, members = _members(args, params, config)
    reports = [
        verify_theorem(f, params, args.m, config.scan, config.tol, member_scan=config.member_scan)
        for f in members
    ]
    result: dict = {
        "params": params_to_document(params),
        "summary": _summary(reports),
        "reports": reports,
    }
    if kernels:
        result["kernels"] = [kernel_to_document(spec) for spec in kernels]
    if not params.hypothesis_ok:
        result["warning"] = (
            f"alpha + c = {params.alpha_plus_c:.17g} is outside the hypothesis; the bound is not claimed"
        )
        log.warning(result["warning"])
    _emit(args, config, result, render_verification_csv(reports))
    return EXIT_FAIL if any(r.passed is False for r in reports) else 0


def _cmd_theorem_sweep(args: argparse.Namespace, config: RunConfig) -> int:
    grid = load_grid(args.grid)
    reports = sweep(
        grid.cells,
        grid.spec_count,
        grid.seed,
        config.scan,
        M=config.M,
        tol=config.tol,
        taper=config.taper,
        workers=config.workers,
    )
    summary = _summary(reports)
    _emit(args, config, {"summary": summary, "reports": reports}, render_verification_csv(reports))
    print(f"{summary['passed']}/{summary['applicable']} applicable reports pass", file=sys.stderr)
    return EXIT_FAIL if any(r.passed is False for r in reports) else 0


def main(argv: list[str] | None = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%H:%M:%S",
    )

    try:
        config = resolve_config(args)
    except (FileNotFoundError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None

    try:
        code = args.handler(args, config)
    except InputFormatError as e:
        print(f"Error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT) from None
    except BracketError as e:
        print(f"Error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_BRACKET) from None
    except (ParameterError, SeriesShapeError, FileNotFoundError) as e:
        print(f"Error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None

    if code:
        raise SystemExit(code)
