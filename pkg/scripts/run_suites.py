"""Run every property suite over several seeds and print one line per run."""

import argparse
import time
from dataclasses import dataclass

from spancat.fuzz import SUITES, run_suite


@dataclass
class RunConfig:
    seeds: tuple[int, ...] = (0, 1, 2)
    budget: int | None = None


def main(cfg: RunConfig) -> int:
    failed = 0
    for name in SUITES:
        for seed in cfg.seeds:
            t = time.perf_counter()
            rep = run_suite(name, seed, cfg.budget)
            print(f"{rep.summary()}  [{time.perf_counter() - t:.1f}s]")
            for f in rep.failures[:3]:
                print(f"    {f}")
            failed += not rep.ok
    return 1 if failed else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--budget", type=int, default=None)
    a = p.parse_args()
    raise SystemExit(main(RunConfig(tuple(a.seeds), a.budget)))
