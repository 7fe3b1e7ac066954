"""Command-line front end: point reports, verification grids, figure sweeps.

Subcommands:

* ``simulate`` -- build the requested scheme, derive the channel by
  simulation, and write a JSON report of the channel state, fidelity, and
  all information measures.
* ``verify`` -- compare simulated channel states against the closed forms
  over parameter grids and check the closed-form/numeric agreement of the
  information measures; exit code 0 only if every check passes.
* ``sweep`` -- emit figure-reproduction data as CSV (or JSON).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .channels import SCHEMES, analytic_channel, choi_of_channel, fidelity_closed, weight_from_choi
from .infotheory import (
    aux_info_closed,
    classical_accessible_info,
    classical_capacity_closed,
    concurrence,
    concurrence_closed,
    info_report,
    info_report_from_choi,
    quantum_mutual_information,
    shannon_mutual_information,
    symmetric_mixed_choi,
    total_info_closed,
    trigger_joint_distribution,
)
from .linalg import max_abs, partial_trace, trace_distance
from .protocols import (
    A_TO_B,
    B_TO_A,
    SchemeParams,
    build_scheme_common,
    build_scheme_independent,
    channel_endpoints,
    choi_mixed,
    extract_choi,
)

CHOI_TOL = 1e-10
MARGINAL_TOL = 1e-10
AUX_TOL = 1e-12
TOTAL_TOL = 1e-10
CAPACITY_TOL = 1e-6
CONCURRENCE_TOL = 1e-9

_FIGURES = ("3a", "3b", "3c", "4")
_INFO_COLUMNS = ("i_aux", "i_tot", "i_class", "discord", "concurrence", "i_coh", "min_pt_eig", "entanglement_breaking")


def simulated_choi(scheme: str, params: SchemeParams, direction: str) -> np.ndarray:
    """Channel state of a scheme obtained by circuit simulation."""
    input_label, output_label = channel_endpoints(direction)
    if scheme == "independent":
        return extract_choi(build_scheme_independent(params), input_label, output_label)
    if scheme == "common":
        return extract_choi(build_scheme_common(params), input_label, output_label)
    if scheme == "mixed":
        choi_ind = extract_choi(build_scheme_independent(params), input_label, output_label)
        choi_com = extract_choi(build_scheme_common(params), input_label, output_label)
        return choi_mixed(params.t, choi_ind, choi_com)
    raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")


def independent_grid_deviation(grid: int = 9) -> tuple[float, float]:
    """Worst simulated-vs-closed-form deviation over a trigger-angle grid.

    Returns the maximum trace distance between channel states and the
    maximum deviation of the reference marginal from maximally mixed, over
    grid x grid values of (theta1, theta2) and both directions.
    """
    thetas = np.linspace(0.0, math.pi, grid)
    worst_choi = 0.0
    worst_marginal = 0.0
    for theta1 in thetas:
        for theta2 in thetas:
            params = SchemeParams(theta1=theta1, theta2=theta2)
            circuit = build_scheme_independent(params)
            for direction in (A_TO_B, B_TO_A):
                simulated = extract_choi(circuit, *channel_endpoints(direction))
                reference = choi_of_channel(analytic_channel("independent", params, direction))
                worst_choi = max(worst_choi, trace_distance(simulated, reference))
                marginal = partial_trace(simulated, 2, [0]) - np.eye(2) / 2
                worst_marginal = max(worst_marginal, max_abs(marginal))
    return worst_choi, worst_marginal


def common_line_deviation(count: int = 17) -> tuple[float, float]:
    """Same as :func:`independent_grid_deviation` for the common-trigger scheme."""
    worst_choi = 0.0
    worst_marginal = 0.0
    for theta in np.linspace(0.0, math.pi, count):
        params = SchemeParams(theta=theta)
        circuit = build_scheme_common(params)
        for direction in (A_TO_B, B_TO_A):
            simulated = extract_choi(circuit, *channel_endpoints(direction))
            reference = choi_of_channel(analytic_channel("common", params, direction))
            worst_choi = max(worst_choi, trace_distance(simulated, reference))
            marginal = partial_trace(simulated, 2, [0]) - np.eye(2) / 2
            worst_marginal = max(worst_marginal, max_abs(marginal))
    return worst_choi, worst_marginal


def infotheory_deviations(points: int = 101) -> dict[str, float]:
    """Worst closed-form vs numeric deviation of each measure over a t grid."""
    worst = {"aux": 0.0, "total": 0.0, "capacity": 0.0, "concurrence": 0.0}
    for t in np.linspace(0.0, 1.0, points):
        choi = symmetric_mixed_choi(t)
        table = trigger_joint_distribution(t)
        worst["aux"] = max(worst["aux"], abs(aux_info_closed(t) - shannon_mutual_information(table)))
        worst["total"] = max(worst["total"], abs(total_info_closed(t) - quantum_mutual_information(choi)))
        accessible, _ = classical_accessible_info(choi)
        worst["capacity"] = max(worst["capacity"], abs(classical_capacity_closed(t) - accessible))
        worst["concurrence"] = max(worst["concurrence"], abs(concurrence_closed(t) - concurrence(choi)))
    return worst


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def run_verification(grid: int = 9, points: int = 101) -> list[CheckResult]:
    """All verification checks at the given grid sizes."""
    ind_choi, ind_marginal = independent_grid_deviation(grid)
    com_choi, com_marginal = common_line_deviation(max(17, grid))
    info = infotheory_deviations(points)
    return [
        CheckResult(f"independent choi vs closed form ({grid}x{grid}, both dirs)", ind_choi, CHOI_TOL),
        CheckResult("independent reference marginal vs I/2", ind_marginal, MARGINAL_TOL),
        CheckResult(f"common choi vs closed form ({max(17, grid)} angles, both dirs)", com_choi, CHOI_TOL),
        CheckResult("common reference marginal vs I/2", com_marginal, MARGINAL_TOL),
        CheckResult(f"trigger info closed form vs table ({points} t)", info["aux"], AUX_TOL),
        CheckResult(f"total info closed form vs channel state ({points} t)", info["total"], TOTAL_TOL),
        CheckResult(f"classical capacity closed form vs optimizer ({points} t)", info["capacity"], CAPACITY_TOL),
        CheckResult(f"concurrence closed form vs spectrum ({points} t)", info["concurrence"], CONCURRENCE_TOL),
    ]


def _format_number(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    return f"{value:.12g}"


def _emit(text: str, out_path: str | None) -> int:
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return 3
    return 0


def _resolve_params(args, parser: argparse.ArgumentParser) -> SchemeParams:
    def angle(angle_name: str, prob_name: str) -> float:
        theta = getattr(args, angle_name)
        prob = getattr(args, prob_name)
        if theta is not None and prob is not None:
            parser.error(f"--{angle_name} and --{prob_name} are mutually exclusive")
        if prob is not None:
            if not 0.0 <= prob <= 1.0:
                parser.error(f"--{prob_name} must be in [0, 1]")
            return 2.0 * math.asin(math.sqrt(prob))
        if theta is not None:
            return theta
        return math.pi / 2

    t = args.t
    if args.scheme == "mixed":
        if t is None:
            parser.error("--t is required for the mixed scheme")
        if not 0.0 <= t <= 1.0:
            parser.error("--t must be in [0, 1]")
    elif t is not None:
        parser.error("--t only applies to the mixed scheme")
    return SchemeParams(
        theta1=angle("theta1", "p1"),
        theta2=angle("theta2", "p2"),
        theta=angle("theta", "p"),
        t=0.0 if t is None else t,
    )


def _cmd_simulate(args, parser: argparse.ArgumentParser) -> int:
    if args.format != "json":
        parser.error("simulate reports are JSON only")
    params = _resolve_params(args, parser)
    choi = simulated_choi(args.scheme, params, args.direction)
    effective_t = {"independent": 1.0, "common": 0.0, "mixed": params.t}[args.scheme]
    q = weight_from_choi(choi)
    report = {
        "scheme": args.scheme,
        "params": {
            "theta1": params.theta1,
            "theta2": params.theta2,
            "theta": params.theta,
            "t": params.t,
            "p1": params.p1,
            "p2": params.p2,
            "p": params.p,
            "direction": args.direction,
            "seed": args.seed,
        },
        "choi": {
            "re": np.real(choi).tolist(),
            "im": np.imag(choi).tolist(),
        },
        "q": q,
        "fidelity": (1.0 + q) / 2.0,
        "info": asdict(info_report_from_choi(choi, effective_t)),
        "tool_version": __version__,
    }
    return _emit(json.dumps(report, indent=2) + "\n", args.out)


def _cmd_verify(args) -> int:
    results = run_verification(grid=args.grid, points=args.points)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name:<58} max dev {result.deviation:.3e}  tol {result.tolerance:.0e}  {status}")
    all_passed = all(result.passed for result in results)
    print(f"VERIFY: {'PASS' if all_passed else 'FAIL'}")
    return 0 if all_passed else 1


def _sweep_table(figure: str, points: int) -> tuple[list[str], list[list]]:
    if figure == "3a":
        header = ["p1", "p2", "F_ab", "F_ba"]
        grid = np.linspace(0.0, 1.0, points)
        rows = []
        for p1 in grid:
            for p2 in grid:
                params = SchemeParams.from_probabilities(p1=p1, p2=p2)
                rows.append(
                    [
                        float(p1),
                        float(p2),
                        fidelity_closed(analytic_channel("independent", params, A_TO_B)),
                        fidelity_closed(analytic_channel("independent", params, B_TO_A)),
                    ]
                )
        return header, rows
    if figure == "3b":
        header = ["p", "F_ab", "F_ba"]
        rows = []
        for p in np.linspace(0.0, 1.0, points):
            params = SchemeParams.from_probabilities(p=p)
            rows.append(
                [
                    float(p),
                    fidelity_closed(analytic_channel("common", params, A_TO_B)),
                    fidelity_closed(analytic_channel("common", params, B_TO_A)),
                ]
            )
        return header, rows
    if figure == "3c":
        header = ["t", "F"]
        rows = []
        for t in np.linspace(0.0, 1.0, points):
            params = SchemeParams.from_probabilities(t=float(t))
            rows.append([float(t), fidelity_closed(analytic_channel("mixed", params, A_TO_B))])
        return header, rows
    header = ["t"] + list(_INFO_COLUMNS)
    rows = []
    for t in np.linspace(0.0, 1.0, points):
        report = info_report(float(t))
        rows.append(
            [
                report.t,
                report.i_aux,
                report.i_tot,
                report.i_class,
                report.discord,
                report.concurrence,
                report.i_coh,
                report.min_pt_eigenvalue,
                report.entanglement_breaking,
            ]
        )
    return header, rows


def _cmd_sweep(args, parser: argparse.ArgumentParser) -> int:
    if args.points < 2:
        parser.error("--points must be at least 2")
    header, rows = _sweep_table(args.figure, args.points)
    if args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_format_number(value) for value in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "figure": args.figure,
            "points": args.points,
            "columns": header,
            "rows": [[bool(v) if isinstance(v, (bool, np.bool_)) else float(v) for v in row] for row in rows],
            "tool_version": __version__,
        }
        text = json.dumps(payload, indent=2) + "\n"
    return _emit(text, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellbidir",
        description="Bidirectional single-Bell-pair teleportation: simulation, verification, and sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="simulate one parameter point and emit a JSON report")
    sim.add_argument("--scheme", choices=SCHEMES, required=True)
    sim.add_argument("--theta1", type=float, default=None, help="Alice's trigger angle in radians")
    sim.add_argument("--theta2", type=float, default=None, help="Bob's trigger angle in radians")
    sim.add_argument("--theta", type=float, default=None, help="common trigger angle in radians")
    sim.add_argument("--p1", type=float, default=None, help="Alice's firing probability (converted to an angle)")
    sim.add_argument("--p2", type=float, default=None, help="Bob's firing probability")
    sim.add_argument("--p", type=float, default=None, help="common firing probability")
    sim.add_argument("--t", type=float, default=None, help="mixing weight, mixed scheme only")
    sim.add_argument("--direction", choices=[A_TO_B, B_TO_A], default=A_TO_B)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--out", default=None, help="output path (default: stdout)")
    sim.add_argument("--format", choices=["csv", "json"], default="json")

    verify = sub.add_parser("verify", help="check simulated channels against closed forms")
    verify.add_argument("--grid", type=int, default=9, help="trigger-angle grid size per axis")
    verify.add_argument("--points", type=int, default=101, help="t-grid size for the information checks")
    verify.add_argument("--seed", type=int, default=0)

    sweep = sub.add_parser("sweep", help="emit figure-reproduction data")
    sweep.add_argument("--figure", choices=_FIGURES, required=True)
    sweep.add_argument("--points", type=int, default=101)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--out", default=None, help="output path (default: stdout)")
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "simulate":
        return _cmd_simulate(args, parser)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_sweep(args, parser)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
