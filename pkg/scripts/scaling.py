#!/usr/bin/env python3
"""Time the threshold computation on random instances of growing size.

    python scripts/scaling.py --max-size 1000000 --seed 0
"""

from __future__ import annotations

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass, field

from eqcolor import equitable_chromatic_threshold, make_instance


@dataclass
class ScalingConfig:
    ks: list[int] = field(default_factory=lambda: [10**3, 10**4, 10**5, 3 * 10**5])
    max_size: int = 10**6
    repeats: int = 3
    seed: int = 0


def run(config: ScalingConfig) -> list[dict]:
    rng = random.Random(config.seed)
    rows = []
    for k in config.ks:
        best = float("inf")
        for _ in range(config.repeats):
            sizes = [rng.randint(1, config.max_size) for _ in range(k)]
            t0 = time.perf_counter()
            res = equitable_chromatic_threshold(make_instance(sizes))
            best = min(best, time.perf_counter() - t0)
        rows.append({"k": k, "seconds": best, "d": res.d})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=ScalingConfig.max_size)
    ap.add_argument("--repeats", type=int, default=ScalingConfig.repeats)
    ap.add_argument("--seed", type=int, default=ScalingConfig.seed)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    config = ScalingConfig(max_size=args.max_size, repeats=args.repeats, seed=args.seed)
    rows = run(config)
    if args.json:
        print(json.dumps({"config": asdict(config), "rows": rows}, indent=2))
        return
    for row in rows:
        print(f"k={row['k']:>7}  {row['seconds'] * 1e3:8.2f} ms  d={row['d']}")


if __name__ == "__main__":
    main()
