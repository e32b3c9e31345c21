"""Command-line front end.

Exit status: 0 success, 2 usage error, 3 domain or validity error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .constants import THZ
from .correlations import ideal_correlations, incoherent_correlations
from .errors import (
    ConfigurationError,
    DegenerateInputError,
    LowIntensityError,
    ParameterDomainError,
    UnsupportedOrderError,
)
from .extsource import ExternalSourceStats
from .metrics import Herald, ideal_limits, purity_efficiency
from .params import thermal_occupancy
from .photon_mc import DEFAULT_CHUNK, DEFAULT_MU, build_table, sample_heralded, sample_unconditional
from .sweeps import NOMINAL_GAMMA_V, SweepKind, SweepSpec, render, run_sweep, to_csv, to_json
from .wick import TwoPointTable, multi_molecule_correlator, raman_correlator

EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 2, 3, 4

_SWEEPS = {
    "g2-curve": (SweepKind.G2_CURVE, -3.0, 3.0, False),
    "delay-sweep": (SweepKind.DELAY, 0.0, 3.0, False),
    "coherence-sweep": (SweepKind.COHERENCE, 1.0, 1e4, True),
    "background-sweep": (SweepKind.BACKGROUND, 1e-3, 1e3, True),
}


class UsageError(Exception):
    pass


def load_config(path):
    """Read ``key=value`` lines (``#`` comments allowed) or a JSON object."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        return {k.replace("-", "_"): str(v) for k, v in data.items()}
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        k, v = (s.strip() for s in line.split("=", 1))
        out[k.replace("-", "_")] = v
    return out


def _common(p):
    g = p.add_argument_group("physical parameters")
    g.add_argument("--temperature", type=float, default=300.0, help="ambient temperature, K")
    g.add_argument("--nu-v-thz", type=float, default=50.0, help="vibrational frequency, THz")
    g.add_argument("--gamma-v", type=float, default=None,
                   help="phonon amplitude decay rate, 1/s (delays are otherwise in units of 1/gamma_v)")
    g.add_argument("--g2-omega", type=float, default=1.0, help="drive g2 at zero delay")
    g.add_argument("--g3-omega", type=float, default=1.0, help="drive g3 at zero delay")
    g.add_argument("--drive-csv", default=None, help="tabulated drive statistics: tau_s,g2[,g3]")
    g.add_argument("--g2-bg", type=float, default=2.0, help="background g2 (both bands)")
    o = p.add_argument_group("output")
    o.add_argument("--format", choices=("csv", "json"), default="csv")
    o.add_argument("--out", default=None, help="output file (default: stdout)")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--config", default=None, help="key=value or JSON file; flags override it")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="raman-hsps",
        description="Heralded single-photon source from Raman scattering on molecules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", help="purity and efficiency of the ideal source, both herald directions")
    _common(p)

    for name, (kind, lo, hi, log) in _SWEEPS.items():
        p = sub.add_parser(name, help=f"{kind.value} sweep")
        _common(p)
        p.add_argument("--min", type=float, default=lo, dest="axis_min")
        p.add_argument("--max", type=float, default=hi, dest="axis_max")
        p.add_argument("--points", type=int, default=201)
        p.add_argument("--scale", choices=("linear", "log"), default="log" if log else "linear")

    p = sub.add_parser("mc", help="Monte Carlo detection and postselection")
    _common(p)
    p.add_argument("--mu-st", type=float, default=DEFAULT_MU, help="mean Stokes count per window")
    p.add_argument("--mu-ast", type=float, default=DEFAULT_MU, help="mean anti-Stokes count per window")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--heralds", type=int, default=None, help="sample heralded events directly")
    mode.add_argument("--trials", type=int, default=None, help="sample unconditional windows")
    p.add_argument("--chunk", type=int, default=DEFAULT_CHUNK)
    p.add_argument("--molecules", type=float, default=None,
                   help="incoherent drive over this many molecules (default: ideal source)")

    p = sub.add_parser("oracle", help="Wick-enumeration value of one correlator vs its closed form")
    _common(p)
    p.add_argument("--order", default="1,1", help="m1,m2 photon orders, e.g. 1,2")
    p.add_argument("--tau-gamma", type=float, default=0.0, help="delay gamma_v*tau (ideal scenario)")
    p.add_argument("--molecules", type=int, default=None,
                   help="enumerate this many molecules under an incoherent drive (<= 6)")
    p.add_argument("--anti-stokes-first", action="store_true")
    return parser


def parse_args(argv):
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        try:
            cfg = load_config(known.config)
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from exc
        subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
        for sp in subparsers.choices.values():
            dests = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in cfg.items() if k in dests})
        args = parser.parse_args(argv)
        unknown = set(cfg) - {a.dest for a in subparsers.choices[args.command]._actions}
        if unknown:
            raise UsageError(f"unknown config keys for {args.command}: {sorted(unknown)}")
        return args
    return parser.parse_args(argv)


def _source(args):
    if args.drive_csv:
        return ExternalSourceStats.from_csv(args.drive_csv)
    if args.g2_omega == 1.0 and args.g3_omega == 1.0:
        return ExternalSourceStats.coherent()
    return ExternalSourceStats.constant(args.g2_omega, args.g3_omega)


def _n_v(args):
    return thermal_occupancy(nu_v=args.nu_v_thz * THZ, temperature=args.temperature)


def _meta(args, **extra):
    meta = {"tool": "raman_hsps", "version": __version__, "command": args.command,
            "temperature": args.temperature, "nu_v_thz": args.nu_v_thz,
            "g2_omega": args.g2_omega, "g3_omega": args.g3_omega}
    if args.drive_csv:
        meta["drive_csv"] = args.drive_csv
    meta.update(extra)
    return meta


def _emit(args, columns, rows, meta):
    text = to_json(columns, rows, meta) if args.format == "json" else to_csv(columns, rows, meta)
    _write(args, text)


def _write(args, text):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_ideal(args):
    n_v = _n_v(args)
    src = _source(args)
    gamma = args.gamma_v or NOMINAL_GAMMA_V
    rows = []
    for herald in (Herald.STOKES, Herald.ANTI_STOKES):
        c = ideal_correlations(n_v, gamma, 0.0, src, anti_stokes_first=herald is Herald.ANTI_STOKES)
        f = purity_efficiency(c, herald)
        lim = ideal_limits(n_v, src, herald)
        rows.append([herald.value, f.purity, f.efficiency, lim.purity, lim.efficiency])
    _emit(args, ["herald", "purity", "efficiency", "purity_limit", "efficiency_limit"], rows,
          _meta(args, n_v=n_v))


def cmd_sweep(args):
    kind = _SWEEPS[args.command][0]
    spec = SweepSpec(kind=kind, axis_min=args.axis_min, axis_max=args.axis_max, points=args.points,
                     log=args.scale == "log", temperature=args.temperature, nu_v_thz=args.nu_v_thz,
                     gamma_v=args.gamma_v, g2_omega=args.g2_omega, g3_omega=args.g3_omega,
                     g2_bg=args.g2_bg, drive_csv=args.drive_csv)
    _write(args, render(run_sweep(spec), args.format))


def cmd_mc(args):
    n_v = _n_v(args)
    src = _source(args)
    if args.molecules is not None:
        c = incoherent_correlations(n_v, args.molecules, src)
    else:
        c = ideal_correlations(n_v, args.gamma_v or NOMINAL_GAMMA_V, 0.0, src)
    table = build_table(c, args.mu_st, args.mu_ast)
    if args.trials is not None:
        est = sample_unconditional(table, args.trials, args.seed, chunk=args.chunk)
    else:
        est = sample_heralded(table, args.heralds or 1_000_000, args.seed, chunk=args.chunk)
    analytic = purity_efficiency(c)
    d = est.to_dict()
    d["analytic_purity"] = analytic.purity
    d["analytic_efficiency"] = analytic.efficiency
    meta = _meta(args, n_v=n_v, mu_st=args.mu_st, mu_ast=args.mu_ast, chunk=args.chunk,
                 molecules=args.molecules, heralds=args.heralds, trials=args.trials, seed=args.seed)
    if args.format == "json":
        d = {k: (None if isinstance(v, float) and not math.isfinite(v) else v) for k, v in d.items()}
        _write(args, json.dumps({"metadata": meta, "estimate": d}, indent=2, allow_nan=False) + "\n")
    else:
        counts = d.pop("counts")
        cols = list(d) + [f"count_{k}" for k in counts]
        _emit(args, cols, [list(d.values()) + list(counts.values())], meta)


def cmd_oracle(args):
    try:
        m1, m2 = (int(x) for x in args.order.split(","))
    except ValueError as exc:
        raise UsageError(f"--order must look like 1,2, got {args.order!r}") from exc
    n_v = _n_v(args)
    src = _source(args)
    gamma = args.gamma_v or NOMINAL_GAMMA_V
    tau = args.tau_gamma / gamma
    table = TwoPointTable(n_v, gamma, args.nu_v_thz * THZ)
    if args.molecules is not None:
        if tau != 0.0:
            raise UsageError("--molecules (incoherent drive) is evaluated at zero delay only")
        value = multi_molecule_correlator((m1, m2), args.molecules, table, src)
        closed = incoherent_correlations(n_v, args.molecules, src).value(m1, m2)
    else:
        value = raman_correlator((m1, m2), tau, table, src, anti_stokes_first=args.anti_stokes_first)
        closed = ideal_correlations(n_v, gamma, tau, src,
                                    anti_stokes_first=args.anti_stokes_first or tau < 0).value(m1, m2)
    rel = abs(value - closed) / abs(closed) if closed else math.inf
    _emit(args, ["m1", "m2", "oracle", "closed_form", "rel_diff"], [[m1, m2, value, closed, rel]],
          _meta(args, n_v=n_v, tau_gamma=args.tau_gamma, molecules=args.molecules))


COMMANDS = {"ideal": cmd_ideal, "mc": cmd_mc, "oracle": cmd_oracle,
            **{name: cmd_sweep for name in _SWEEPS}}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parse_args(argv)
        COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (UsageError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterDomainError, LowIntensityError, DegenerateInputError, UnsupportedOrderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
