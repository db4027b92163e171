"""Full-scale verification run, written to a JSON report.

    python3 scripts/run_verification.py --samples 100000 --out reports/full.json
"""

import argparse
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from lorentz_bridge.harness import SamplingSpec, render_json, run_all


@dataclass
class RunConfig:
    seed: int = 42
    samples: int = 100_000
    beta_max: float = 0.99
    beta_mode: str = "uniform"
    suites: str = "all"
    out: Path = Path("reports/verification.json")


def parse(argv=None) -> RunConfig:
    cfg = RunConfig()
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    for name, value in asdict(cfg).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    return RunConfig(**vars(ap.parse_args(argv)))


def main(argv=None) -> int:
    cfg = parse(argv)
    spec = SamplingSpec(seed=cfg.seed, n_samples=cfg.samples, beta_max=cfg.beta_max, beta_mode=cfg.beta_mode)
    report = run_all(spec, suites=cfg.suites)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(render_json(report.to_dict()))
    for v in report.verdicts:
        print(f"{'PASS' if v.passed else 'FAIL'}  {v.suite_name:<24} n={v.samples:<8} "
              f"max_rel={v.max_rel_residual:.3e}")
    print(f"wall time {report.wall_time:.2f}s, report at {cfg.out}")
    return 0 if report.overall_pass else 1


if __name__ == "__main__":
    sys.exit(main())
