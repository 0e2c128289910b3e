"""
How tight is the slope 2/(n-1)? For each n, print min l(beta(v) v^-1) / l(v)
per length shell, over all coprime m.

    python3 scripts/slope_fit.py --ns 2 3 4 --radius 9
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from coxhecke import affine as aff
from coxhecke.verify import coprime_residues


@dataclass
class Config:
    ns: list[int] = field(default_factory=lambda: [2, 3, 4])
    radius: int = 9


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--ns", type=int, nargs="+", default=Config().ns)
    parser.add_argument("--radius", type=int, default=Config.radius)
    cfg = Config(**vars(parser.parse_args()))

    for n in cfg.ns:
        a = aff.bound_f(n).a
        ratios: dict[int, Fraction] = {}
        for m in coprime_residues(n):
            d = aff.SuperbasicDatum(n, m)
            for shell in aff.ball_shells(n, cfg.radius):
                for v in shell:
                    if v.length == 0:
                        continue
                    r = Fraction(aff.twist_defect(v, d).length, v.length)
                    ratios[v.length] = min(ratios.get(v.length, r), r)
        row = "  ".join(f"{z}:{float(r):.3f}" for z, r in sorted(ratios.items()))
        print(f"n={n} slope a={a}  min ratio by length  {row}")


if __name__ == "__main__":
    main()
