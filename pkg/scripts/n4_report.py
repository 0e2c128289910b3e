"""
Sweep the twist-length bound at n = 4 and print, per length, the smallest
l(beta(v) v^-1) next to the printed and corrected-cap bounds.

    python3 scripts/n4_report.py --radius 10
"""

import argparse
from dataclasses import dataclass

from coxhecke import affine as aff
from coxhecke.verify import coprime_residues


@dataclass
class Config:
    n: int = 4
    radius: int = 10


def sweep(cfg: Config) -> dict[int, int]:
    """Minimum twist defect length per l(v), over all coprime m."""
    best: dict[int, int] = {}
    for m in coprime_residues(cfg.n):
        d = aff.SuperbasicDatum(cfg.n, m)
        for v in aff.enumerate_ball(cfg.n, cfg.radius):
            k = aff.twist_defect(v, d).length
            best[v.length] = min(best.get(v.length, k), k)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=Config.n)
    parser.add_argument("--radius", type=int, default=Config.radius)
    cfg = Config(**vars(parser.parse_args()))

    printed = aff.bound_f(cfg.n)
    fixed = aff.bound_f(cfg.n, aff.effective_cap(cfg.n))
    best = sweep(cfg)
    print(f"# n={cfg.n} radius={cfg.radius}")
    print(f"# printed:   {printed}  (c = {printed.c})")
    print(f"# corrected: {fixed}  (c = {fixed.c})")
    print("l(v)\tmin l(beta(v)v^-1)\tprinted f\tcorrected f")
    for z in sorted(best):
        print(f"{z}\t{best[z]}\t{printed(z)}\t{fixed(z)}")
    holds = all(best[z] >= printed(z) for z in best)
    print(f"# paper-f {'holds' if holds else 'fails'} at n={cfg.n} up to length {cfg.radius}")


if __name__ == "__main__":
    main()
