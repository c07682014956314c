#!/usr/bin/env python3
"""Count instances whose feasibility spectrum has gaps.

For each instance in a small grid, compare the equitable chromatic number
with the threshold.  A gap means some r between them is infeasible, as for
K(7,7) where r = 3, 5, 7 fail.

    python scripts/gap_census.py --max-k 3 --max-size 12 --show 10
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from itertools import combinations_with_replacement

from eqcolor import equitable_chromatic_threshold, make_instance, min_equitable, spectrum
from eqcolor.cli import format_ranges


@dataclass
class CensusConfig:
    max_k: int = 3
    max_size: int = 12
    show: int = 10


def census(config: CensusConfig):
    total = 0
    gapped = []
    for k in range(2, config.max_k + 1):
        for sizes in combinations_with_replacement(range(1, config.max_size + 1), k):
            inst = make_instance(sizes)
            total += 1
            chi = min_equitable(inst)
            p = equitable_chromatic_threshold(inst).p
            if chi != p:
                gapped.append((inst, chi, p))
    return total, gapped


def main():
    ap = argparse.ArgumentParser(description="Census of gapped equitable spectra.")
    ap.add_argument("--max-k", type=int, default=CensusConfig.max_k)
    ap.add_argument("--max-size", type=int, default=CensusConfig.max_size)
    ap.add_argument("--show", type=int, default=CensusConfig.show)
    args = ap.parse_args()
    config = CensusConfig(args.max_k, args.max_size, args.show)
    total, gapped = census(config)
    print(f"{len(gapped)} of {total} instances (k >= 2) have chi_eq < threshold")
    for inst, chi, p in gapped[: config.show]:
        missing = spectrum(inst, p).infeasible
        missing = [r for r in missing if r > chi]
        print(f"  {inst}: chi_eq={chi} threshold={p} gaps at {format_ranges(missing)}")


if __name__ == "__main__":
    main()
