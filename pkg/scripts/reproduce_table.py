"""Ground-state binding energies of the PT variant over the (q, alpha) grid.

Writes a CSV and prints the largest deviation from the reference cells below.
"""
import argparse
import csv
import sys
import time
from dataclasses import dataclass

from hulthen_kg import NoBoundStateError, PotentialParams, Variant, pt_level

REFERENCE = {
    (0.5, 1.0): 0.802776, (0.5, 2.0): 0.614831,
    (1.0, 0.5): 0.600781, (1.0, 1.0): 0.260846, (1.0, 2.0): 0.506699,
    (1.5, 0.5): 0.182955, (1.5, 1.0): 0.204579, (1.5, 2.0): 0.474727,
    (2.0, 0.5): 0.126170, (2.0, 1.0): 0.180312, (2.0, 2.0): 0.459301,
}


@dataclass
class Config:
    m: float = 1.0
    s0: float = 0.25
    qs: tuple = (0.5, 1.0, 1.5, 2.0)
    alphas: tuple = (0.5, 1.0, 2.0)


def binding_table(cfg):
    rows = []
    for q in cfg.qs:
        for al in cfg.alphas:
            p = PotentialParams(cfg.m, al, cfg.s0, q, Variant.PT)
            try:
                eb = pt_level(p, 0).energy - cfg.m
            except NoBoundStateError:
                eb = None
            rows.append((q, al, eb))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = binding_table(Config())
    dt = time.perf_counter() - t0

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["q", "alpha", "E_binding", "reference"])
    worst = 0.0
    for q, al, eb in rows:
        ref = REFERENCE.get((q, al))
        if eb is not None and ref is not None:
            worst = max(worst, abs(eb - ref))
        w.writerow([q, al, "none" if eb is None else f"{eb:.6f}", "none" if ref is None else f"{ref:.6f}"])
    if fh is not sys.stdout:
        fh.close()
    print(f"max deviation {worst:.2e}, {dt * 1e3:.1f} ms", file=sys.stderr)


if __name__ == "__main__":
    main()
