"""Scan S0 for zeros of the q = 0 eigencondition at E = m.

The eigencondition has a root with script_E = 0 only at isolated S0. This
walks S0 on a grid, tracks the sign of the (real) rotated 1F1 and refines
each sign change with brentq.
"""
import argparse
import cmath
import csv
import sys
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from hulthen_kg import PotentialParams, Variant
from hulthen_kg.spectra import eigencondition, q0_pt_eigenvalues


@dataclass
class Config:
    m: float = 1.0
    alpha: float = 2.0
    s0_max: float = 12.0
    steps: int = 600


def rotated(cfg, s0):
    p = PotentialParams(cfg.m, cfg.alpha, s0, 0, Variant.EXPONENTIAL)
    # exp(-i S0 / alpha) F(0) is real
    return (cmath.exp(-1j * s0 / cfg.alpha) * eigencondition(p, 0.0)).real


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=float, default=Config.m)
    ap.add_argument("--alpha", type=float, default=Config.alpha)
    ap.add_argument("--s0-max", type=float, default=Config.s0_max)
    ap.add_argument("--steps", type=int, default=Config.steps)
    cfg = Config(**{k: v for k, v in vars(ap.parse_args()).items()})

    grid = np.linspace(cfg.s0_max / cfg.steps, cfg.s0_max, cfg.steps)
    vals = [rotated(cfg, s) for s in grid]
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["s0", "residual", "accepted"])
    for a, b, fa, fb in zip(grid[:-1], grid[1:], vals[:-1], vals[1:]):
        if fa * fb > 0:
            continue
        s0 = brentq(lambda s: rotated(cfg, s), a, b, xtol=1e-15, rtol=1e-15)
        scan = q0_pt_eigenvalues(PotentialParams(cfg.m, cfg.alpha, s0, 0, Variant.EXPONENTIAL))
        res = min((r.residual for r in scan.roots), default=float("nan"))
        w.writerow([f"{s0:.15g}", f"{res:.3e}", bool(scan.roots)])


if __name__ == "__main__":
    main()
