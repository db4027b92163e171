"""Residual of E = C * omega**n under boosts, for a grid of exponents.

Only n = 1 survives every frame; everything else drifts with the Doppler
factor.  Prints CSV: exponent, then one column per frame speed.
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

import numpy as np

from lorentz_bridge.theorems import ashby_miller_residual


@dataclass
class GridConfig:
    exponents: list[float] = field(default_factory=lambda: [0.5, 0.75, 1.0, 1.25, 1.5, 2.0])
    betas: list[float] = field(default_factory=lambda: [round(float(b), 6) + 0.0 for b in np.linspace(-0.9, 0.9, 7)])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--exponents", type=float, nargs="+")
    ap.add_argument("--betas", type=float, nargs="+")
    args = ap.parse_args(argv)
    cfg = GridConfig()
    cfg.exponents = args.exponents or cfg.exponents
    cfg.betas = args.betas or cfg.betas

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n"] + [f"beta={b:g}" for b in cfg.betas])
    for n in cfg.exponents:
        w.writerow([f"{n:g}"] + [f"{ashby_miller_residual(n, b):.6g}" for b in cfg.betas])
    return 0


if __name__ == "__main__":
    sys.exit(main())
