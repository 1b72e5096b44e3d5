"""Exhaustive comparison of fused relatedness with equality under the functor A."""

import argparse
from dataclasses import dataclass

from spancat.fuzz import fused_exhaustive


@dataclass
class CensusConfig:
    max_group: int = 6
    max_T: int = 6
    max_leg: int = 6
    transitive_legs: bool = True


def main(cfg: CensusConfig) -> int:
    c = fused_exhaustive(cfg.max_group, cfg.max_T, cfg.max_leg, cfg.transitive_legs)
    print(f"groups={c.groups} span classes={c.spans} pairs={c.pairs} fused pairs={c.fused_pairs}")
    print(f"mismatches={len(c.failures)}")
    for f in c.failures[:10]:
        print("  " + f)
    return 1 if c.failures else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-group", type=int, default=6)
    p.add_argument("--max-T", type=int, default=6)
    p.add_argument("--max-leg", type=int, default=6)
    p.add_argument("--all-legs", action="store_true", help="allow intransitive X and Y (slow)")
    a = p.parse_args()
    raise SystemExit(main(CensusConfig(a.max_group, a.max_T, a.max_leg, not a.all_legs)))
