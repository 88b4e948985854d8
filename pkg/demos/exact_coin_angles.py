#!/usr/bin/env python3
"""Why the coin angles are computed by residue, not by multiplication.

The coin at site n rotates by 2*pi*(p/(4q))*n.  Evaluating that with
floating-point multiplication loses the exact structure: cos of the
reduced angle is what decides whether a site reflects, and at large n
the product 2*pi*alpha*n carries rounding error much bigger than pi.
Reducing p*n mod 4q first keeps every value exact forever: barriers
are literal 0.0, quadrant boundaries are literal +-1.0, and the values
at n and n + 4q*10**12 agree bit for bit.
"""

import math

from iqwalk import QuarterFraction, trig_pair_exact

HUGE = 10**15


def main():
    f = QuarterFraction(1, 3)  # alpha = 1/12, barriers at n = 3 mod 6
    print(f"alpha = {f}")

    for n in (3, -3, 9, 3 + 6 * HUGE):
        c, s = trig_pair_exact(f, n)
        print(f"  n = {n:<18d} cos = {c!r:6s} sin = {s!r}")
    print("  barrier cosines above are exact zeros, signs exact units\n")

    naive = math.cos(2.0 * math.pi * (1.0 / 12.0) * (3 + 6 * HUGE))
    exact, _ = trig_pair_exact(f, 3 + 6 * HUGE)
    print("cos at the far barrier site:")
    print(f"  float multiply then libm cos: {naive!r}")
    print(f"  residue reduction:            {exact!r}\n")

    c1, s1 = trig_pair_exact(f, 5)
    c2, s2 = trig_pair_exact(f, 5 + 12 * HUGE)
    print(f"periodicity at distance 4q*10^13: bitwise equal = "
          f"{(c1, s1) == (c2, s2)}")

    # the fold c(k) = s(2q - k) is also bitwise, including the midpoint
    mid = QuarterFraction(1, 2)
    c, s = trig_pair_exact(mid, 1)
    print(f"quadrant midpoint (alpha = {mid}, n = 1): cos == sin is {c == s}, "
          f"value {c!r}")


if __name__ == "__main__":
    main()
