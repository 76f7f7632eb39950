"""ODE residual of assembled eigenfunctions at h and h/2, per variant and level."""
import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from hulthen_kg import PotentialParams, Variant, level, real_hulthen_level
from hulthen_kg.wavefun import ode_residual, sample


@dataclass
class Config:
    h: float = 1e-3
    n_max: int = 2
    alpha: float = 1.0
    s0: float = 0.2
    q: float = 0.5


def grid(lo, hi, h):
    n = int(round((hi - lo) / h))
    return np.linspace(lo, hi, n + 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h", type=float, default=Config.h)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    cfg = Config(**vars(ap.parse_args()))

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["variant", "n", "energy", "residual", "ratio", "perturbed_1pct"])

    real = PotentialParams(1, 0.25, 0.25, 1)
    x = grid(real.pole + 0.5, real.pole + 40.5, cfg.h)
    for n in range(2):
        e = real_hulthen_level(real, n).energy
        rep = ode_residual(real, e, sample(real, x, n=n))
        bad = ode_residual(real, 1.01 * e, sample(real, x, n=n, energy=1.01 * e)).residual
        w.writerow(["real", n, f"{e:.10g}", f"{rep.residual:.3e}", f"{rep.ratio:.3f}", f"{bad:.3e}"])

    for variant, win in ((Variant.PT, (-3.0, 3.0)), (Variant.PSEUDO, (-1.5, 3.0))):
        p = PotentialParams(1, cfg.alpha, cfg.s0, cfg.q, variant)
        x = grid(win[0] / cfg.alpha, win[1] / cfg.alpha, cfg.h)
        for n in range(cfg.n_max + 1):
            e = level(p, n).energy
            s = sample(p, x, n=n)
            rep = ode_residual(p, e, s)
            bad = ode_residual(p, 1.01 * e, sample(p, x, n=n, energy=1.01 * e, branch=s.branch)).residual
            w.writerow([variant.value, n, f"{e:.10g}", f"{rep.residual:.3e}", f"{rep.ratio:.3f}", f"{bad:.3e}"])


if __name__ == "__main__":
    main()
