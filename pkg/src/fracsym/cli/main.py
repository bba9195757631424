"""Command-line entry point: ``fracsym <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 numerical failure (including a reduce
run that did not converge), 3 domain error. Data goes to stdout or --out
files; diagnostics go to stderr.
"""

import argparse
import math
import sys
from collections.abc import Sequence

import numpy as np

from fracsym import __version__
from fracsym.cli import io
from fracsym.config import Settings
from fracsym.ekober.operators import ek_diff, ek_integral
from fracsym.ekober.params import EKParams
from fracsym.exceptions import (
    ConfigError,
    DomainError,
    ExpressionError,
    GridSizeError,
    InputFormatError,
    NumericalError,
)
from fracsym.fkdvb.params import FkdvbParams
from fracsym.fkdvb.residual import residual
from fracsym.fkdvb.symmetry import invariants, solve_scaling
from fracsym.fraccore.compare import probe_points, relative_deviation
from fracsym.fraccore.grid import UniformGrid1D
from fracsym.fraccore.parsing import format_bivariate, format_gp, parse_bivariate, parse_gp
from fracsym.fraccore.polynomial import gp_rl_deriv, gp_rl_integral
from fracsym.frlnum.operators import rl_deriv_num, rl_integral_num
from fracsym.frlnum.schemes import SchemeKind
from fracsym.prolong.coefficients import phi_p, phi_pq_mixed
from fracsym.prolong.fields import MixedOrderSpec, ScalingField
from fracsym.prolong.oracle import group_deformation_oracle
from fracsym.reduce.problem import (
    DEFAULT_BASIS,
    DEFAULT_COLLOCATION,
    DEFAULT_DOMAIN,
    DEFAULT_TOLERANCE,
    ReducedProblem,
)
from fracsym.reduce.reconstruct import reconstruct
from fracsym.reduce.solver import ReducedSolutionCandidate, solve_reduced
from fracsym.utils.logging import set_level, setup_logger

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    """Flags that parse but do not fit together."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text: str, count: int, flag: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"{flag} expects {count} comma-separated values, got {text!r}")
    try:
        return [float(part) for part in parts]
    except ValueError as e:
        raise UsageError(f"{flag}: {e}") from e


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_deriv(args: argparse.Namespace) -> int:
    if (args.expr is None) == (args.input is None):
        raise UsageError("deriv needs exactly one of --expr and --input")
    if args.expr is not None:
        f = parse_gp(args.expr, "t")
        result = gp_rl_integral(f, args.order) if args.integral else gp_rl_deriv(f, args.order)
        _emit(format_gp(result))
        return EXIT_OK

    f = io.grid_function_1d(io.read_table(args.input))
    if args.integral:
        result = rl_integral_num(f, args.order)
    else:
        result = rl_deriv_num(f, args.order, SchemeKind(args.scheme))
    metadata = {
        "operation": "integral" if args.integral else "derivative",
        "scheme": args.scheme,
        "order": repr(args.order),
        "flag": "1 marks boundary-stencil nodes of reduced accuracy",
    }
    text = io.write_grid_function_1d(args.output, result, metadata)
    if args.output is None:
        _emit(text)
    return EXIT_OK


def symmetry_record(params: FkdvbParams) -> dict:
    gen = solve_scaling(params)
    inv = invariants(params)
    return {
        "params": {"p": params.p, "q": params.q, "r": params.r},
        "branch": params.branch.value,
        "generator": {"alpha": gen.alpha, "beta": gen.beta, "gamma": gen.gamma},
        "invariants": {"z_exponent": inv.z_exponent, "w_exponent": inv.w_exponent, **inv.describe()},
        "equivariance_exponent": params.equivariance_exponent,
    }


def cmd_symmetry(args: argparse.Namespace) -> int:
    record = symmetry_record(FkdvbParams(args.p, args.q, args.r))
    gen = record["generator"]
    lines = [
        f"generator: ({gen['alpha']:.12g}, {gen['beta']:.12g}, {gen['gamma']:.12g})",
        f"branch: {record['branch']}",
        f"z: {record['invariants']['z']}",
        f"w: {record['invariants']['w']}",
        f"equivariance exponent: {record['equivariance_exponent']:.12g}",
    ]
    _emit("\n".join(lines))
    if args.json is not None:
        io.write_record(args.json, record)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    params = FkdvbParams(args.p, args.q, args.r)
    z_ref, w0 = (None, 1.0) if args.normalize is None else _floats(args.normalize, 2, "--normalize")
    problem = ReducedProblem.build(
        params,
        z_min=args.zmin,
        z_max=args.zmax,
        size=args.basis,
        collocation=args.colloc,
        z_ref=z_ref,
        w0=w0,
        tolerance=args.tol,
    )
    candidate = solve_reduced(problem, max_iterations=args.max_iter)
    text = io.write_record(args.out, candidate.to_record())
    if args.out is None:
        _emit(text)
    if not candidate.converged:
        sys.stderr.write(
            f"reduce did not converge: max|G| = {candidate.residual_norm:.3e} "
            f"> {problem.tolerance:.1e} after {candidate.iterations} iterations\n"
        )
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    x1min, x1max, n1, x2min, x2max, n2 = _floats(args.grid, 6, "--grid")
    for lo, hi, n, axis in ((x1min, x1max, n1, "x1"), (x2min, x2max, n2, "x2")):
        if not 0 <= lo < hi:
            raise DomainError(f"{axis} range must satisfy 0 <= min < max, got [{lo}, {hi}]")
        if not n.is_integer():
            raise UsageError(f"{axis} node count must be an integer, got {n}")
    candidate = ReducedSolutionCandidate.from_record(io.read_record(args.candidate))
    # RL derivatives have terminal 0, so the grid always starts there
    grid1 = UniformGrid1D.span(0.0, x1max, int(n1))
    grid2 = UniformGrid1D.span(0.0, x2max, int(n2))
    u = reconstruct(candidate, None, grid1, grid2)
    res = residual(u, candidate.params, SchemeKind(args.scheme), args.threads)
    x1, x2 = res.mesh()
    box = (x1 >= x1min) & (x2 >= x2min)
    trusted = box & ~res.reduced_accuracy
    values = np.asarray(res.samples)[trusted]
    linf = float(np.max(np.abs(values))) if values.size else math.nan
    l2 = float(np.sqrt(np.sum(values**2) * grid1.step * grid2.step)) if values.size else math.nan
    metadata = {
        "scheme": args.scheme,
        "params": f"p={candidate.params.p!r}, q={candidate.params.q!r}, r={candidate.params.r!r}",
        "linf": repr(linf),
        "l2": repr(l2),
        "flag": "1 marks boundary-stencil or singular nodes",
    }
    text = io.write_grid_function_2d(args.out, res, value="R", mask=box, metadata=metadata)
    if args.out is None:
        _emit(text)
    sys.stderr.write(f"residual on the box: max {linf:.3e}, L2 {l2:.3e}\n")
    return EXIT_OK


def _tabulated(table: io.Table, growth: float):
    y, f = table.column("y"), table.column("f")
    if np.any(np.diff(y) <= 0):
        raise InputFormatError("column 'y' must be increasing")

    def func(points: np.ndarray) -> np.ndarray:
        inside = np.interp(points, y, f)
        # power-law tail beyond the last node
        tail = f[-1] * (points / y[-1]) ** growth
        return np.where(points > y[-1], tail, inside)

    return y, func


def cmd_ek(args: argparse.Namespace) -> int:
    if (args.expr is None) == (args.input is None):
        raise UsageError("ek needs exactly one of --expr and --input")
    params = EKParams(args.c, args.a, args.b)
    operator = ek_diff if args.diff else ek_integral
    if args.expr is not None:
        result = operator(parse_gp(args.expr, "y"), params, continuation=args.continuation)
        _emit(format_gp(result.value))
        if result.used_continuation:
            sys.stderr.write(f"continued exponents: {', '.join(f'{mu:g}' for mu in result.continued)}\n")
        return EXIT_OK

    y, func = _tabulated(io.read_table(args.input), args.growth)
    points = y[y > 0]
    values = operator(func, params, points, growth=args.growth, nodes=args.nodes)
    metadata = {"operation": "EK derivative" if args.diff else "EK integral", "c": args.c, "a": args.a, "b": args.b}
    text = io.write_table(args.output, ("y", "f"), np.column_stack([points, values]), metadata)
    if args.output is None:
        _emit(text)
    return EXIT_OK


def cmd_prolong_check(args: argparse.Namespace) -> int:
    field = ScalingField(*_floats(args.field, 3, "--field"))
    u = parse_bivariate(args.u)
    if args.q is None:
        order = args.p
        value = phi_p(args.m, field, u, args.p)
    else:
        order = MixedOrderSpec(args.m, args.p, args.q)
        value = phi_pq_mixed(order, field, u)
    points = probe_points()
    oracle = group_deformation_oracle(field, u, order, args.m, points=points)
    deviation = relative_deviation(np.asarray(value.evaluate(*points)), oracle)
    _emit(f"{format_bivariate(value)}\noracle deviation: {deviation:.3e}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracsym", description="Fractional Lie symmetry toolkit for the fKdV-Burgers equation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default: FRACSYM_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True)

    deriv = sub.add_parser("deriv", help="RL derivative or integral, exact or on a sampled grid")
    deriv.add_argument("--order", type=float, required=True)
    deriv.add_argument("--scheme", choices=[s.value for s in SchemeKind], default=SchemeKind.PRODUCT_TRAPEZOID.value)
    deriv.add_argument("--input", help="CSV with columns t,f on a uniform grid")
    deriv.add_argument(
        "--output", help="CSV with columns t,f,flag for --input; flag 1 marks reduced-accuracy nodes (default: stdout)"
    )
    deriv.add_argument("--integral", action="store_true", help="RL integral instead of derivative")
    deriv.add_argument("--expr", help='power sum in t, e.g. "1*t^0.5 + -2*t^1.25"')
    deriv.set_defaults(handler=cmd_deriv)

    symmetry = sub.add_parser("symmetry", help="scaling generator and invariants")
    for name in ("p", "q", "r"):
        symmetry.add_argument(f"--{name}", type=float, required=True)
    symmetry.add_argument("--json", help="also write a JSON record")
    symmetry.set_defaults(handler=cmd_symmetry)

    reduce = sub.add_parser("reduce", help="solve the reduced EK equation")
    for name in ("p", "q", "r"):
        reduce.add_argument(f"--{name}", type=float, required=True)
    reduce.add_argument("--zmin", type=float, default=DEFAULT_DOMAIN[0])
    reduce.add_argument("--zmax", type=float, default=DEFAULT_DOMAIN[1])
    reduce.add_argument("--basis", type=int, default=DEFAULT_BASIS)
    reduce.add_argument("--colloc", type=int, default=DEFAULT_COLLOCATION)
    reduce.add_argument("--normalize", help="z0,w0: pin v(z0) = w0 (default: zmax,1)")
    reduce.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    reduce.add_argument("--max-iter", type=int, default=200)
    reduce.add_argument("--out", help="candidate JSON (default: stdout)")
    reduce.set_defaults(handler=cmd_reduce)

    verify = sub.add_parser("verify", help="residual of a reconstructed candidate on a grid")
    verify.add_argument("--candidate", required=True)
    verify.add_argument("--grid", required=True, help="x1min,x1max,n1,x2min,x2max,n2")
    verify.add_argument("--scheme", choices=[s.value for s in SchemeKind], default=SchemeKind.PRODUCT_TRAPEZOID.value)
    verify.add_argument(
        "--out", help="CSV with columns x1,x2,R,flag; flag 1 marks boundary-stencil or singular nodes (default: stdout)"
    )
    verify.set_defaults(handler=cmd_verify)

    ek = sub.add_parser("ek", help="Erdelyi-Kober integral or derivative")
    ek.add_argument("--c", type=float, required=True)
    ek.add_argument("--a", type=float, required=True)
    ek.add_argument("--b", type=float, required=True)
    ek.add_argument("--expr", help="power sum in y")
    ek.add_argument("--input", help="CSV with columns y,f")
    ek.add_argument("--output", help="output CSV for --input (default: stdout)")
    ek.add_argument("--diff", action="store_true", help="EK derivative instead of integral")
    ek.add_argument("--continuation", action="store_true", help="continue analytically outside the strip")
    ek.add_argument("--growth", type=float, default=0.0, help="f ~ y^growth beyond the last node")
    ek.add_argument("--nodes", type=int, default=128)
    ek.set_defaults(handler=cmd_ek)

    prolong = sub.add_parser("prolong-check", help="prolongation coefficient of a scaling field against its oracle")
    prolong.add_argument("--p", type=float, required=True)
    prolong.add_argument("--q", type=float, default=None, help="second order for the mixed coefficient")
    prolong.add_argument("--m", type=int, choices=(1, 2), default=1)
    prolong.add_argument("--field", required=True, help="c1,c2,cu")
    prolong.add_argument("--u", required=True, help='power sum in x1, x2, e.g. "1*x1^0.5*x2^0.25"')
    prolong.set_defaults(handler=cmd_prolong_check)
    return parser


def _configure_logging(verbose: bool) -> None:
    level = "DEBUG" if verbose else Settings.from_env().log_level
    try:
        set_level(level)
    except ValueError as e:
        raise ConfigError(str(e)) from e


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _configure_logging(args.verbose)
        if args.threads is not None and args.threads <= 0:
            raise UsageError(f"--threads must be positive, got {args.threads}")
        logger.debug("Running %s with %s", args.command, vars(args))
        return args.handler(args)
    except (UsageError, ConfigError, ExpressionError, InputFormatError, OSError) as e:
        sys.stderr.write(f"fracsym: error: {e}\n")
        return EXIT_USAGE
    except (DomainError, GridSizeError) as e:
        sys.stderr.write(f"fracsym: domain error: {e}\n")
        return EXIT_DOMAIN
    except NumericalError as e:
        sys.stderr.write(f"fracsym: numerical failure: {e}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    raise SystemExit(main())
