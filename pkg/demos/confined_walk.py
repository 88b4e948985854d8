#!/usr/bin/env python3
"""Exact confinement of a walk whose coin angle is a quarter fraction.

When the inverse period is p/(4q) with odd p, the coin at sites
n = q, 3q, 5q, ... is a pure off-diagonal reflection: its diagonal
entries are not merely small, they are exactly zero in the arithmetic.
A walker released at the origin therefore never crosses +-q, no matter
how long it runs.  This script evolves a few such walks, proves the
amplitudes outside [-q, q] are bit-for-bit zero, and draws the final
distributions as text histograms.
"""

from iqwalk import (
    QuarterFraction,
    RotationalSchedule,
    barrier_positions,
    distribution,
    evolve,
    finite_support_verify,
    moment_stats,
    DEFAULT_SPINOR,
)

STEPS = 500


def histogram(state, width=56):
    probs = distribution(state)
    top = max(total for _, _, total in probs.values())
    for n in sorted(probs):
        total = probs[n][2]
        bar = "#" * max(1, round(width * total / top)) if total > 0 else ""
        print(f"  {n:+4d} {total:9.6f} {bar}")


def main():
    for p, q in ((1, 1), (1, 3), (3, 5), (1, 12)):
        f = QuarterFraction(p, q)
        schedule = RotationalSchedule(f)
        report = finite_support_verify(f, STEPS)
        print(f"alpha = {f}  ({STEPS} steps)")
        print(f"  reflecting sites in [-2q, 2q]: "
              f"{barrier_positions(schedule, (-2 * q, 2 * q))}")
        print(f"  predicted interval {report.predicted_interval}, "
              f"observed support {report.observed_support}, "
              f"leaked probability {report.leaked_probability}")

        state = evolve(DEFAULT_SPINOR, schedule, STEPS)
        stats = moment_stats(state)
        print(f"  mean {stats.mean:+.6f}, std dev {stats.std_dev:.6f} "
              f"(never exceeds q = {q})")
        if q <= 5:
            histogram(state)
        print()


if __name__ == "__main__":
    main()
