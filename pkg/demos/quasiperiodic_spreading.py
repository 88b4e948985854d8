#!/usr/bin/env python3
"""Quasi-periodic coins: no exact barrier, yet motion is far from free.

Irrational inverse periods never produce an exactly reflecting site,
but good rational approximants p/(4q) mean there are sites where the
coin diagonal is tiny, and the walk repeatedly stalls against these
soft walls.  Compare the support growth for the golden mean against
the free alpha = 1/2 case, and list the near-reflecting sites that a
threshold scan finds in the first few hundred lattice positions.
"""

from fractions import Fraction

from iqwalk import (
    DEFAULT_SPINOR,
    NAMED_CONSTANTS,
    RandomSchedule,
    RotationalSchedule,
    evolve,
    moment_stats,
    near_barriers,
    support,
)

CHECKPOINTS = (50, 100, 200, 400)


def run(label, schedule):
    print(label)
    for steps in CHECKPOINTS:
        state = evolve(DEFAULT_SPINOR, schedule, steps)
        lo, hi = support(state, threshold=1e-12)
        stats = moment_stats(state)
        drift = abs(1.0 - state.norm())
        print(f"  t={steps:4d}  support [{lo:+5d}, {hi:+5d}]  "
              f"sigma {stats.std_dev:8.3f}  norm drift {drift:.2e}")
    print()


def main():
    golden = NAMED_CONSTANTS["golden"]()
    run(f"golden mean alpha = {float(golden.midpoint):.12f}",
        RotationalSchedule(golden))

    # soft walls: both coin diagonals below 0.05 in magnitude
    scan = near_barriers(RotationalSchedule(golden), (-300, 300), threshold=0.05)
    print(f"near-reflecting sites (|cos| < {scan.threshold}), "
          f"rigorous={scan.rigorous}:")
    for site, size in scan.sites:
        print(f"  n = {site:+4d}  |cos(2 pi alpha n)| = {size:.4f}")
    print()

    run("free case alpha = 1/2 (identity coin, sigma = t exactly)",
        RotationalSchedule(Fraction(1, 2)))

    run("Haar-random coins, seed 11 (disorder pins the walker)",
        RandomSchedule(seed=11))


if __name__ == "__main__":
    main()
