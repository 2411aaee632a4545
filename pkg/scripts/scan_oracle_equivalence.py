"""Exhaustive selector-vs-oracle agreement scan over real quadratic fields.

For each d in --fields, K = Q(sqrt(d)) over F = Q, and every squarefree
conductor N = (m) with m <= --bound, the scan compares the selector union
against the brute-force enumeration and counts agreements. A nonzero mismatch
count is a bug in one of the two implementations.

    python3 scripts/scan_oracle_equivalence.py --bound 300
    python3 scripts/scan_oracle_equivalence.py --fields 2,13 --drop-b4
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from darmonsel.feasibility import build_profile, select_gartner, select_greenberg
from darmonsel.fields import factor_ideal, parse_field
from darmonsel.intmath import factorize
from darmonsel.oracle import enumerate_admissible
from darmonsel.quadratic import make_extension


def squarefree(m: int) -> bool:
    return all(e == 1 for e in factorize(m).values())


def scan_field(d: int, bound: int, drop_b4: bool):
    F = parse_field([0, 1])
    K = make_extension(F, [d])
    checked = mismatches = feasible = 0
    for m in range(1, bound + 1):
        if m > 1 and not squarefree(m):
            continue
        N = factor_ideal(F, generator=[m])
        profile = build_profile(K, N, strict=False)
        selected = tuple(sorted(
            select_gartner(profile, allow_drop_b4=drop_b4)
            + select_greenberg(profile),
            key=lambda s: s.sort_key))
        enumerated = enumerate_admissible(profile, allow_drop_b4=drop_b4)
        checked += 1
        if selected != enumerated:
            mismatches += 1
            print(f"  MISMATCH d={d} N=({m}): selectors {len(selected)}, "
                  f"oracle {len(enumerated)}")
        elif selected:
            feasible += 1
    return checked, mismatches, feasible


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=300)
    parser.add_argument("--fields", default="2,3,5,7,13",
                        help="comma-separated squarefree d for K = Q(sqrt d)")
    parser.add_argument("--drop-b4", action="store_true",
                        help="scan the widened gartner selector as well")
    args = parser.parse_args()
    total_mismatch = 0
    t0 = time.perf_counter()
    for d in (int(x) for x in args.fields.split(",")):
        checked, mismatches, feasible = scan_field(d, args.bound, args.drop_b4)
        total_mismatch += mismatches
        print(f"d={d:3d}: {checked:4d} conductors, {feasible:4d} feasible, "
              f"{mismatches} mismatches")
    dt = time.perf_counter() - t0
    print(f"total mismatches: {total_mismatch}  ({dt:.1f}s)")
    return 1 if total_mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
