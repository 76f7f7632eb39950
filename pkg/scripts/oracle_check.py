"""Finite-difference check of closed-form real levels over a parameter suite."""
import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from hulthen_kg import PotentialParams, count_real_levels
from hulthen_kg.oracle import verify_closed_form


@dataclass
class Config:
    points: tuple = (8000, 16000)
    sets: list = field(default_factory=lambda: [
        (1.0, 0.25, 0.25, 1.0),
        (1.0, 0.5, 0.5, 1.0),
        (1.0, 0.1, 0.1, 0.5),
        (1.0, 1.0, 1.5, -1.0),
        (1.0, 0.5, 1.5, -1.0),
        (1.0, 1.0, 3.0, -2.0),
    ])
    n_max: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, nargs=2, default=None)
    ap.add_argument("--n-max", type=int, default=None)
    args = ap.parse_args()
    cfg = Config()
    if args.points:
        cfg.points = tuple(args.points)
    if args.n_max is not None:
        cfg.n_max = args.n_max

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["m", "alpha", "s0", "q", "n", "lambda_closed", "lambda_fd", "rel_diff", "ratio", "status"])
    t0 = time.perf_counter()
    for m, al, s0, q in cfg.sets:
        p = PotentialParams(m, al, s0, q)
        _, valid = count_real_levels(p)
        for n in valid[: cfg.n_max + 1]:
            r = verify_closed_form(p, n, points=cfg.points)
            w.writerow([m, al, s0, q, n, f"{r.lambda_closed:.10g}", f"{r.lambda_fd:.10g}",
                        f"{r.rel_diff:.3e}", f"{r.convergence_ratio:.3f}", r.status])
    print(f"{time.perf_counter() - t0:.1f} s", file=sys.stderr)


if __name__ == "__main__":
    main()
