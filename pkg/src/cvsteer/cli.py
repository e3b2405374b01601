r"""Command-line interface.

Subcommands:
    check        criteria report for one state and direction
    triangoloid  conditional-state region dataset (CSV or JSON)
    noisy        twin beam under thermal loss, criteria along the evolution
    appendix     the five built-in consistency checks
    sweep        brute-force measurement sweep against the closed form

States are passed as JSON, inline (--state) or from a file (--state-file).
Outputs are byte deterministic for identical inputs: no timestamps, floats in
shortest round-trip form, the package version in a leading # comment line of
CSV output. Exit codes: 0 success, 1 usage or parse errors, 2 unphysical
state.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .appendix import run_all
from .dynamics import ChannelSpec, t_ent, t_ns, timeline, timeline_csv
from .oracle import sweep_measurements
from .phase_space import UnphysicalStateError, is_physical
from .states import TmstSpec, state_from_dict
from .steering import steering_report
from .triangoloid import generate, to_csv, to_json_dict

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors by default; 2 is reserved
    # for unphysical states here, so remap to 1.
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _load_state(args) -> tuple[np.ndarray, TmstSpec | None]:
    if (args.state is None) == (args.state_file is None):
        raise ValueError("exactly one of --state or --state-file is required")
    if args.state is not None:
        raw = args.state
    else:
        with open(args.state_file) as fh:
            raw = fh.read()
    return state_from_dict(json.loads(raw))


def _flatten(prefix: str, obj, rows: list[tuple[str, str]]) -> None:
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, rows)
    else:
        rows.append((prefix, _fmt(obj)))


def _cmd_check(args) -> int:
    cm, spec = _load_state(args)
    if not is_physical(cm, tol=args.tol):
        raise UnphysicalStateError("input covariance matrix is not a physical state")
    report = steering_report(cm, args.dir, tmst=spec)
    payload = {"version": __version__, **report.to_dict()}
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        rows: list[tuple[str, str]] = []
        _flatten("", report.to_dict(), rows)
        lines = [f"# cvsteer {__version__}", "field,value"]
        lines += [f"{k},{v}" for k, v in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_triangoloid(args) -> int:
    _, spec = _load_state(args)
    if spec is None:
        raise ValueError("triangoloid needs a 'tmst' or 'twb' state")
    if spec.muA == 0.0 or spec.muB == 0.0:
        raise UnphysicalStateError("triangoloid needs positive purities")
    ds = generate(spec, grid_n=args.grid_n)
    if args.format == "json":
        _emit(json.dumps({"version": __version__, **to_json_dict(ds)}) + "\n", args.out)
    else:
        head = (
            f"# cvsteer {__version__}\n"
            f"# overlap {_fmt(ds.nonclassical_overlap)}\n"
            f"# max_depth {repr(ds.max_depth)}\n"
        )
        _emit(head + to_csv(ds), args.out)
    if args.plot:
        from .figures import plot_triangoloid

        plot_triangoloid(ds, args.plot)
    return 0


def _cmd_noisy(args) -> int:
    ch = ChannelSpec(args.Gamma, args.Nth)
    points = timeline(args.Ns, ch, n_times=args.n_times)
    tn, te = t_ns(args.Ns, ch), t_ent(ch)

    def _t_str(v: float) -> str:
        return "never" if math.isinf(v) else repr(v)

    if args.format == "json":
        payload = {
            "version": __version__,
            "Ns": args.Ns,
            "Gamma": args.Gamma,
            "Nth": args.Nth,
            "t_ns": _jsonable(tn),
            "t_ent": _jsonable(te),
            "columns": ["t", "muA", "muB", "r", "sigma_steer", "negativity", "overlap"],
            "points": [
                [p.t, p.spec.muA, p.spec.muB, p.spec.r, p.sigma_steer, p.negativity,
                 p.overlap]
                for p in points
            ],
        }
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        head = (
            f"# cvsteer {__version__}\n"
            f"# t_ns {_t_str(tn)}\n"
            f"# t_ent {_t_str(te)}\n"
        )
        _emit(head + timeline_csv(points), args.out)
    if args.plot:
        from .figures import plot_timeline

        plot_timeline(points, tn, te, args.plot)
    return 0


def _cmd_appendix(args) -> int:
    results = run_all()
    if args.format == "json":
        payload = [
            {"name": r.name, "passed": r.passed, "details": r.details}
            for r in results
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.details}"
            for r in results
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.passed for r in results) else 1


def _cmd_sweep(args) -> int:
    cm, _ = _load_state(args)
    if not is_physical(cm):
        raise UnphysicalStateError("input covariance matrix is not a physical state")
    res = sweep_measurements(
        cm,
        n_mu=args.n_mu,
        n_mus=args.n_mus,
        n_phi=args.n_phi,
        mu_floor=args.mu_floor,
        mus_floor=args.mus_floor,
        tol=args.tol,
    )
    payload = {
        "version": __version__,
        "best_depth": res.best_depth,
        "best_mu": res.best_mu,
        "best_mu_s": res.best_mu_s,
        "best_phi": res.best_phi,
        "closed_form_depth": res.closed_form_depth,
        "within_tol": res.within_tol,
        "exceeds_closed_form": res.exceeds_closed_form,
        "grid": list(res.grid),
        "floors": list(res.floors),
        "tol": res.tol,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [f"# cvsteer {__version__}", "field,value"]
        lines += [
            f"{k},{_fmt(v)}" for k, v in payload.items() if k != "version"
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="cvsteer", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cvsteer {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="write output to this file")

    state = argparse.ArgumentParser(add_help=False)
    state.add_argument("--state", default=None, help="inline JSON state spec")
    state.add_argument("--state-file", default=None, help="path to a JSON state spec")

    p = sub.add_parser("check", parents=[common, state], help="criteria report")
    p.add_argument("--dir", choices=("BA", "AB"), default="BA")
    p.add_argument("--tol", type=float, default=1e-9, help="physicality tolerance")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "triangoloid", parents=[common, state], help="conditional-state region"
    )
    p.add_argument("--grid-n", type=int, default=100)
    p.add_argument("--plot", default=None, help="also render a figure to this file")
    p.set_defaults(func=_cmd_triangoloid)

    p = sub.add_parser("noisy", parents=[common], help="twin beam under thermal loss")
    p.add_argument("--Ns", type=float, required=True, help="squeezing photon number")
    p.add_argument("--Gamma", type=float, required=True, help="damping rate")
    p.add_argument("--Nth", type=float, required=True, help="thermal photon number")
    p.add_argument("--n-times", type=int, default=200)
    p.add_argument("--plot", default=None, help="also render a figure to this file")
    p.set_defaults(func=_cmd_noisy)

    p = sub.add_parser("appendix", parents=[common], help="built-in consistency checks")
    p.set_defaults(func=_cmd_appendix)

    p = sub.add_parser(
        "sweep", parents=[common, state], help="measurement sweep vs closed form"
    )
    p.add_argument("--n-mu", type=int, default=20)
    p.add_argument("--n-mus", type=int, default=40)
    p.add_argument("--n-phi", type=int, default=8)
    p.add_argument("--mu-floor", type=float, default=1e-3)
    p.add_argument("--mus-floor", type=float, default=1e-3)
    p.add_argument("--tol", type=float, default=1e-3, help="agreement tolerance")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnphysicalStateError as exc:
        print(f"cvsteer: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"cvsteer: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
