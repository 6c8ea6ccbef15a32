#!/usr/bin/env python3
"""Batch verification over exhaustive and random poset corpora.

    python scripts/sweep_identities.py --max-labeled 5 --random-n 8 12 20 --count 200
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from ordercomplement import incidence as inc
from ordercomplement import poset as ps
from ordercomplement.cli import random_sweep_seeds


@dataclass
class SweepConfig:
    max_labeled: int = 4
    random_n: list = field(default_factory=lambda: [10])
    densities: list = field(default_factory=lambda: [0.1, 0.3, 0.6])
    count: int = 100
    seed: int = 0
    size_guard: int = 14


def run_batch(label, posets, guard):
    t0 = time.perf_counter()
    reports = [inc.verify_theorem(p, label, guard) for p in posets]
    dt = time.perf_counter() - t0
    checks = sum(len(r.checks) for r in reports)
    failed = sum(r.failed for r in reports)
    dets = Counter(r.det_complement for r in reports)
    common = ", ".join(f"{d}:{c}" for d, c in sorted(dets.items())[:7])
    print(f"{label:<28} posets={len(reports):>5}  identities={checks:>6}  failed={failed}  "
          f"{dt:6.2f}s  det Z̄ histogram {{{common}{', ...' if len(dets) > 7 else ''}}}")
    return failed


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-labeled", type=int, default=SweepConfig.max_labeled)
    ap.add_argument("--random-n", type=int, nargs="+", default=[10])
    ap.add_argument("--densities", type=float, nargs="+", default=[0.1, 0.3, 0.6])
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--size-guard", type=int, default=SweepConfig.size_guard)
    cfg = SweepConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    failed = 0
    for n in range(cfg.max_labeled + 1):
        failed += run_batch(f"labeled n={n}", list(ps.all_labeled_posets(n)), cfg.size_guard)
    for n in cfg.random_n:
        for d in cfg.densities:
            seeds = random_sweep_seeds(cfg.seed, cfg.count)
            failed += run_batch(f"random n={n} d={d}", [ps.random_poset(n, d, s) for s in seeds], cfg.size_guard)
    print("all identities hold" if not failed else f"{failed} identity failures")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
