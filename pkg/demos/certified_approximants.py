#!/usr/bin/env python3
"""Certified quarter-fraction approximants of irrational inverse periods.

An irrational alpha has infinitely many odd-numerator fractions p/(4q)
with |alpha - p/(4q)| < 1/(4q^2).  Each such q marks a site where the
coin diagonal dips below pi/(2q): a soft wall for the walk.  All bound
checks here run in exact rational arithmetic over a certified enclosure
of alpha, so a reported approximant is a theorem about the real number,
not about its double-precision image.
"""

import math

from iqwalk import (
    NAMED_CONSTANTS,
    RotationalSchedule,
    continued_fraction,
    convergents,
    quarter_approximants,
    verify_bound,
)


def main():
    for key in ("pi/2", "golden", "sqrt2-1"):
        alpha = NAMED_CONSTANTS[key]()
        cf = continued_fraction(alpha, max_depth=12)
        quotients = ", ".join(str(a) for a in (cf.a0, *cf.partial_quotients))
        print(f"{key}  =  [{quotients}, ...]")

        conv = convergents(cf)[:6]
        frac = ", ".join(f"{c.numerator}/{c.denominator}" for c in conv)
        print(f"  convergents: {frac}")

        schedule = RotationalSchedule(alpha)
        print("  certified quarter approximants:")
        for approx in quarter_approximants(alpha, count=4, q_max=100000):
            f = approx.fraction
            assert verify_bound(alpha, f)  # re-check, exact arithmetic
            err = abs(float(alpha.midpoint) - float(f.alpha))
            cos_at_q, _ = schedule.angle_cos_sin(f.q)
            print(f"    {f!s:12s} |alpha - p/4q| = {err:.3e} < {1 / (4 * f.q ** 2):.3e}"
                  f"   coin diagonal at n=q: {abs(cos_at_q):.6f}"
                  f" < pi/2q = {math.pi / (2 * f.q):.6f}")
        print()


if __name__ == "__main__":
    main()
