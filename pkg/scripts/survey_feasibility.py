"""Random survey of feasibility verdicts over three base fields.

Samples random deltas and random factored conductors over F = Q, Q(sqrt 2),
and the totally real cubic x^3 + x^2 - 2x - 1, runs the full report on each,
and tabulates verdicts, failure reasons, and the split between the two
constructions. Every sampled report is also checked against the two
sign-parity theorems, so a run doubles as a randomized property test.

    python3 scripts/survey_feasibility.py --samples 500 --seed 7
"""

import argparse
import random
import sys
from collections import Counter

sys.path.insert(0, "src")

from darmonsel.errors import DarmonselError, IsSquare, NoRealPlace, ZeroDelta
from darmonsel.feasibility import feasibility_report
from darmonsel.fields import IdealFactorization, parse_field, primes_above
from darmonsel.quadratic import make_extension

FIELDS = {
    "Q": [0, 1],
    "Q(sqrt2)": [-2, 0, 1],
    "cubic": [-1, -2, 1, 1],
}
SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


def random_extension(rng, F, degree):
    # retry until delta defines a genuine quadratic extension with a real place
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(degree)]
        try:
            return make_extension(F, coeffs)
        except (ZeroDelta, IsSquare, NoRealPlace):
            continue


def random_conductor(rng, F):
    pairs = {}
    for _ in range(rng.randint(0, 3)):
        p = rng.choice(SMALL_PRIMES)
        if p in F.index_warning_primes:
            continue
        P = rng.choice(primes_above(F, p))
        pairs[P] = min(3, pairs.get(P, 0) + rng.randint(1, 2))
    return IdealFactorization.from_pairs(pairs.items())


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    fields = {name: parse_field(poly) for name, poly in FIELDS.items()}

    verdicts = Counter()
    reasons = Counter()
    kinds = Counter()
    violations = 0
    for k in range(args.samples):
        name, F = rng.choice(sorted(fields.items()))
        K = random_extension(rng, F, F.degree)
        N = random_conductor(rng, F)
        try:
            report = feasibility_report(K, N)
        except DarmonselError as e:
            verdicts[f"error:{type(e).__name__}"] += 1
            continue
        verdicts["feasible" if report.feasible else "infeasible"] += 1
        for r in report.failure_reasons:
            reasons[r.code.value] += 1
        if report.gartner_options:
            kinds["gartner"] += 1
        if report.greenberg_options:
            kinds["greenberg"] += 1
        if report.both_feasible:
            kinds["both"] += 1
        # parity theorems, zero tolerance
        if report.feasible and report.sign != -1:
            violations += 1
            print(f"  VIOLATION (i): {name} N={N} sign {report.sign:+d}")
        if (report.sign == -1 and report.profile.inert_part_squarefree
                and report.profile.disc_coprime and not report.feasible):
            violations += 1
            print(f"  VIOLATION (ii): {name} N={N} infeasible at sign -1")
        if not report.theorem1_consistent:
            violations += 1
            print(f"  INCONSISTENT: {name} N={N}")

    print(f"samples: {args.samples}")
    for key in sorted(verdicts):
        print(f"  {key:24s} {verdicts[key]:5d}")
    print("construction availability:")
    for key in sorted(kinds):
        print(f"  {key:24s} {kinds[key]:5d}")
    print("failure reasons seen:")
    for key in sorted(reasons):
        print(f"  {key:24s} {reasons[key]:5d}")
    print(f"theorem violations: {violations}")
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
