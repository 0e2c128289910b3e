"""
Run the verification harness over several systems and print one report each.

    python3 scripts/run_verify.py --presets A2 A3 affine-A1 affine-A2 --radius 6
"""

import argparse
import sys
from dataclasses import dataclass, field

from coxhecke.verify import VerifyScope, all_passed, format_report, run_verify


@dataclass
class Config:
    presets: list[str] = field(default_factory=lambda: ["A2", "A3", "affine-A1", "affine-A2"])
    radius: int = 6
    samples: int = 100
    seed: int = 0


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--presets", nargs="+", default=Config().presets)
    parser.add_argument("--radius", type=int, default=Config.radius)
    parser.add_argument("--samples", type=int, default=Config.samples)
    parser.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(parser.parse_args()))

    ok = True
    for name in cfg.presets:
        scope = VerifyScope(preset=name, radius=cfg.radius, samples=cfg.samples, seed=cfg.seed)
        results = run_verify(scope)
        sys.stdout.write(format_report(results, scope))
        ok &= all_passed(results)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
