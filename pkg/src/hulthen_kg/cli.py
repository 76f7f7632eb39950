"""Command-line front end: tables, figure data, spectra, wavefunctions, checks.

Every subcommand writes CSV (header row, '\\n' line endings) or JSON to
stdout or ``--out``.  Errors print one line, ``error: <Type>: <message>``,
on stderr and exit with status 1 (2 for bad arguments).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import oracle, spectra, wavefun
from .errors import HulthenError, NoBoundStateError
from .model import PotentialParams, Variant, default_reflection_point

TABLE1_Q = (0.5, 1.0, 1.5, 2.0)
TABLE1_ALPHA = (0.5, 1.0, 2.0)
TABLE1_S0 = 0.25
FIGURE_POINTS = 200
FIG1_S0_MIN = 1e-6


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"error: usage: {message}\n")
        sys.exit(2)


def fmt_e(v: float) -> str:
    return f"{v:.6f}"


def fmt_g(v: float) -> str:
    return f"{v:.10g}"


def fmt_r(v: float) -> str:
    return f"{v:.3e}"


@dataclass
class Table:
    command: str
    columns: list[str]
    rows: list[list]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        w.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(dict(command=self.command, columns=self.columns, rows=self.rows), indent=2) + "\n"


def data_path(name: str):
    return resources.files("hulthen_kg") / "data" / name


def load_vector_reference() -> dict[tuple[float, float], str]:
    text = data_path("table1_vector.csv").read_text()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    out = {}
    for row in csv.DictReader(lines):
        out[(float(row["q"]), float(row["alpha"]))] = row["E_binding_vector"]
    return out


def _params(args, variant=None, q=None) -> PotentialParams:
    variant = variant or args.variant
    if q is None:
        q = 0.0 if variant == "exp" else args.q
    return PotentialParams(args.m, args.alpha, args.s0, q, variant)


# --- subcommands -----------------------------------------------------------


def cmd_table1(args) -> Table:
    ref = load_vector_reference()
    rows = []
    for q in TABLE1_Q:
        for al in TABLE1_ALPHA:
            p = PotentialParams(1.0, al, TABLE1_S0, q, Variant.PT)
            try:
                eb = fmt_e(spectra.pt_level(p, 0).energy - p.m)
            except NoBoundStateError:
                eb = "none"
            rows.append([fmt_g(q), fmt_g(al), eb, ref.get((q, al), "none")])
    return Table("table1", ["q", "alpha", "E_binding_scalar", "E_binding_vector_ref"], rows)


def cmd_figure1(args) -> Table:
    m = args.m
    qs = args.q if isinstance(args.q, list) else [args.q]
    rows = []
    for q in qs:
        al = m
        top = q * al / 2
        for s0 in np.linspace(FIG1_S0_MIN, top, args.points):
            p = PotentialParams(m, al, float(s0), q, Variant.PT)
            if not p.pt_exists:
                break
            rows.append([fmt_g(s0), fmt_g(q), fmt_e(spectra.pt_level(p, 0).energy)])
    return Table("figure1", ["S0", "q", "E0"], rows)


def cmd_figure2(args) -> Table:
    m = args.m
    q, s0 = 1.0, 0.5 * m
    start = 2 * s0 / q
    rows = []
    if args.alpha_max < start:
        # the whole sweep lies below the existence boundary
        return Table("figure2", ["alpha", "n", "E"], rows)
    for al in np.linspace(start, args.alpha_max, args.points):
        p = PotentialParams(m, float(al), s0, q, Variant.PT)
        for n in range(args.n_max + 1):
            rows.append([fmt_g(al), str(n), fmt_e(spectra.pt_level(p, n).energy)])
    return Table("figure2", ["alpha", "n", "E"], rows)


def cmd_spectrum(args) -> Table:
    p = _params(args)
    if p.variant is Variant.EXPONENTIAL:
        raise CliError("the exponential variant has no closed-form spectrum; use q0roots")
    if p.variant is Variant.REAL:
        _, ns = spectra.count_real_levels(p)
        if args.n_max is not None:
            ns = [n for n in ns if n <= args.n_max]
    else:
        ns = range((2 if args.n_max is None else args.n_max) + 1)
    rows = []
    for n in ns:
        lvl = spectra.level(p, n)
        rows.append([str(n), fmt_e(lvl.energy_pair[0]), fmt_e(lvl.energy_pair[1]),
                     fmt_g(lvl.level_param.value), fmt_g(lvl.epsilon)])
    return Table("spectrum", ["n", "E_plus", "E_minus", "level_param", "epsilon"], rows)


def _default_window(p: PotentialParams, n: int) -> tuple[float, float]:
    if p.variant is Variant.REAL:
        # psi vanishes at the pole itself, so start there
        return oracle.default_domain(p, n, delta=0.0)
    # just under one period, centred where the reflection maps x to itself
    half = 0.95 * math.pi / p.alpha
    mid = 0.0 if p.variant is Variant.PT else 0.5 * default_reflection_point(p)
    return mid - half, mid + half


def cmd_wavefunction(args) -> Table:
    p = _params(args)
    lo, hi = _default_window(p, args.n)
    lo = lo if args.x_min is None else args.x_min
    hi = hi if args.x_max is None else args.x_max
    if not hi > lo:
        raise CliError("--x-max must exceed --x-min")
    x = np.linspace(lo, hi, args.points)
    if p.variant is Variant.EXPONENTIAL:
        scan = spectra.q0_pt_eigenvalues(p, args.scan_points, args.tol)
        if not scan.roots:
            raise NoBoundStateError("no accepted root of the eigencondition for these parameters")
        s = wavefun.sample(p, x, script_e=scan.roots[0].script_e)
    else:
        s = wavefun.sample(p, x, n=args.n)
    s = wavefun.normalize(s, require_decay=p.variant is Variant.REAL)
    rows = [[fmt_g(xi), fmt_g(v.real), fmt_g(v.imag), fmt_g(abs(v))] for xi, v in zip(x, s.values)]
    return Table("wavefunction", ["x", "re_psi", "im_psi", "abs_psi"], rows)


def cmd_q0roots(args) -> Table:
    p = _params(args, variant="exp")
    scan = spectra.q0_pt_eigenvalues(p, args.scan_points, args.tol)
    rows = []
    for r in scan.roots + scan.rejected:
        ep, em = r.energies(p)
        rows.append([fmt_g(r.script_e), fmt_e(ep), fmt_e(em), fmt_r(r.residual), str(r.accepted).lower()])
    rows.sort(key=lambda row: float(row[0]))
    return Table("q0roots", ["script_E", "E_plus", "E_minus", "residual", "accepted"], rows)


def _json_number(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def cmd_verify(args) -> str:
    p = _params(args, variant="real")
    domain = None
    if args.x_min is not None or args.x_max is not None:
        lo, hi = oracle.default_domain(p, args.n)
        domain = (lo if args.x_min is None else args.x_min, hi if args.x_max is None else args.x_max)
    points = (args.points, 2 * args.points) if args.points else oracle.DEFAULT_POINTS
    rep = oracle.verify_closed_form(p, args.n, points=points, domain=domain).to_dict()
    rep = {k: _json_number(v) for k, v in rep.items()}
    return json.dumps(rep, indent=2, sort_keys=True) + "\n"


# --- argument parsing ------------------------------------------------------


def _common(sp, variant=True, q_list=False, points=None):
    sp.add_argument("--m", type=float, default=1.0)
    sp.add_argument("--alpha", type=float, default=1.0)
    sp.add_argument("--s0", type=float, default=0.25)
    if q_list:
        sp.add_argument("--q", type=float, nargs="+", default=list(TABLE1_Q))
    else:
        sp.add_argument("--q", type=float, default=1.0)
    if variant:
        sp.add_argument("--variant", choices=[v.value for v in Variant], default="real")
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--x-min", type=float, default=None)
    sp.add_argument("--x-max", type=float, default=None)
    sp.add_argument("--points", type=int, default=points)
    sp.add_argument("--scan-points", type=int, default=2001)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out", default=None)


COMMANDS = {
    "table1": cmd_table1,
    "figure1": cmd_figure1,
    "figure2": cmd_figure2,
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
    "q0roots": cmd_q0roots,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hulthen-kg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _common(sub.add_parser("table1", help="ground-state binding energies, PT variant"))
    _common(sub.add_parser("figure1", help="E0 against S0 for several q"), q_list=True, points=FIGURE_POINTS)
    f2 = sub.add_parser("figure2", help="E_n against alpha, n = 0..n_max")
    _common(f2, points=FIGURE_POINTS)
    f2.add_argument("--alpha-max", type=float, default=5.0)
    _common(sub.add_parser("spectrum", help="closed-form levels"))
    _common(sub.add_parser("wavefunction", help="normalized eigenfunction samples"), points=401)
    _common(sub.add_parser("verify", help="finite-difference check of a real-variant level"), variant=False)
    _common(sub.add_parser("q0roots", help="eigencondition roots for q = 0"), variant=False)
    return parser


def _validate(args):
    if args.command == "figure2" and args.n_max is None:
        args.n_max = 2
    if args.points is not None and args.points < 3:
        raise CliError("--points must be >= 3")
    if args.scan_points < 3:
        raise CliError("--scan-points must be >= 3")
    if not args.tol > 0:
        raise CliError("--tol must be positive")
    if args.n < 0 or (args.n_max is not None and args.n_max < 0):
        raise CliError("level indices must be nonnegative")
    if args.command in ("spectrum", "wavefunction"):
        _params(args)
    elif args.command in ("verify", "q0roots"):
        _params(args, variant="real" if args.command == "verify" else "exp")
    if args.command == "verify" and args.format != "json":
        args.format = "json"


def execute(args) -> str:
    _validate(args)
    result = COMMANDS[args.command](args)
    if isinstance(result, str):
        return result
    return result.to_json() if args.format == "json" else result.to_csv()


def run(argv=None) -> str:
    return execute(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = execute(args)
    except (HulthenError, CliError, ValueError) as exc:
        msg = " ".join(str(exc).split())
        sys.stderr.write(f"error: {type(exc).__name__}: {msg}\n")
        return 1
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
