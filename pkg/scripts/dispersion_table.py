"""Plot-ready dispersion curves omega(k) for several rest frequencies.

Long-format CSV (omega0, k, omega, v_p, v_g) so each omega0 is one series.
omega0 = 0 is the light cone.
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

import numpy as np

from lorentz_bridge.kinematics import WaveState, group_velocity, phase_velocity


@dataclass
class DispersionConfig:
    omega0: list[float] = field(default_factory=lambda: [0.0, 0.5, 1.0, 2.0])
    k_max: float = 5.0
    points: int = 50


def rows(cfg: DispersionConfig):
    for w0 in cfg.omega0:
        for k in cfg.k_max * np.arange(1, cfg.points + 1) / cfg.points:
            wave = WaveState(float(np.hypot(w0, k)), (float(k), 0.0, 0.0))
            yield w0, k, wave.omega, phase_velocity(wave), group_velocity(wave)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--omega0", type=float, nargs="+")
    ap.add_argument("--k-max", type=float)
    ap.add_argument("--points", type=int)
    args = ap.parse_args(argv)
    cfg = DispersionConfig()
    cfg.omega0 = args.omega0 or cfg.omega0
    cfg.k_max = args.k_max or cfg.k_max
    cfg.points = args.points or cfg.points

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["omega0", "k", "omega", "v_p", "v_g"])
    for row in rows(cfg):
        w.writerow([f"{x:.6g}" for x in row])
    return 0


if __name__ == "__main__":
    sys.exit(main())
