"""Command-line entry point.

Exit codes: 0 success, 1 verification or simulation failure, 2 usage or
configuration error.
"""
from __future__ import annotations

import argparse
import sys

from . import verify
from .errors import ConfigError, StabilityError
from .qkdv import Trajectory, load_config, simulate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _epsilons(text: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad epsilon list: {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty epsilon list")
    for e in vals:
        if not 0 < e < 0.1:
            raise argparse.ArgumentTypeError(f"epsilon {e} not in (0, 0.1)")
    return vals


def fmt(x: float) -> str:
    return format(x, ".17g")


def write_trajectory_csv(traj: Trajectory, stream) -> None:
    """``t,k,re,im`` rows grouped by sample time, modes ascending over ``[-N, N]``."""
    N = traj.config.n_modes
    stream.write("t,k,re,im\n")
    for state in traj.states:
        t = fmt(state.t)
        for k in range(-N, N + 1):
            c = complex(state.modes.coeff(k))
            stream.write(f"{t},{k},{fmt(c.real)},{fmt(c.imag)}\n")
    if traj.status != "ok":
        stream.write(f"# status={traj.status} {traj.message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qvirasoro",
                                description="Exact q-Virasoro verifier and qKdV simulator")
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run an exact verification suite")
    vsub = pv.add_subparsers(dest="suite", required=True)

    s = vsub.add_parser("identities", help="scalar q-number identities")
    s.add_argument("--max", type=_positive_int, default=12)
    s.add_argument("--json", action="store_true")

    s = vsub.add_parser("jacobi", help="Gamma-twisted Jacobi identity of V_q")
    s.add_argument("--max", type=_positive_int, default=8)
    s.add_argument("--json", action="store_true")

    s = vsub.add_parser("cocycle", help="cocycle agreement, antisymmetry and Jacobi sum")
    s.add_argument("--max-degree", type=_positive_int, default=6)
    s.add_argument("--trials", type=_positive_int, default=100)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--json", action="store_true")

    s = vsub.add_parser("operators", help="operator realization identities")
    s.add_argument("--max", type=_positive_int, default=8)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("simulate", help="integrate qKdV and write a CSV trajectory")
    s.add_argument("--config", required=True)
    s.add_argument("--out", required=True)

    s = sub.add_parser("limit-check", help="q -> 1 convergence to classical KdV")
    s.add_argument("--epsilons", type=_epsilons, default=[1e-2, 1e-3, 1e-4])
    s.add_argument("--modes", type=_positive_int, default=8)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--json", action="store_true")
    return p


def _emit(report: verify.VerifyReport, as_json: bool) -> int:
    print(report.to_json() if as_json else report.to_text())
    print(f"wall time {report.wall_time:.2f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_simulate(config_path: str, out_path: str) -> int:
    try:
        config, init = load_config(config_path)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    try:
        traj = simulate(config, init)
    except StabilityError as exc:
        print(f"simulation failed: {exc}", file=sys.stderr)
        traj = exc.partial
        status = EXIT_FAIL
    try:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            write_trajectory_csv(traj, fh)
    except OSError as exc:
        print(f"cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "simulate":
        return cmd_simulate(args.config, args.out)
    if args.command == "limit-check":
        return _emit(verify.run_limit_check(args.epsilons, args.modes, args.seed), args.json)
    if args.suite == "identities":
        rep = verify.run_identities(args.max)
    elif args.suite == "jacobi":
        rep = verify.run_jacobi(args.max)
    elif args.suite == "cocycle":
        rep = verify.run_cocycle(args.max_degree, args.trials, args.seed)
    else:
        rep = verify.run_operators(args.max)
    return _emit(rep, args.json)


if __name__ == "__main__":
    sys.exit(main())
