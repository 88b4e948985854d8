"""Exact trigonometry for angles that are rational multiples of pi/2.

The walk's confinement argument hinges on coin entries being *exactly*
zero at reflecting sites, which double-precision `cos(2*pi*alpha*n)`
cannot deliver.  Instead the angle is reduced in integer arithmetic:
for alpha = p/(4q) the site-n coin angle is pi*(p*n)/(2q), so the
residue k = p*n mod 4q determines everything.  Quadrant boundaries
(k mod q == 0) return literal 0.0 / 1.0 / -1.0, and the in-quadrant
remainder is evaluated in [0, pi/4] so reflection symmetries hold
bitwise (values at r and q-r are the same floats, swapped).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "QuarterFraction",
    "half_pi_cos_sin",
    "fraction_cos_sin",
    "trig_pair_exact",
]

_BOUNDARY = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))
_ROOT_HALF = math.sqrt(0.5)  # correctly rounded; libm cos/sin of pi/4 disagree by 1 ulp


@dataclass(frozen=True)
class QuarterFraction:
    """A rational inverse period p/(4q) with p odd and gcd(p, q) = 1.

    These are the inverse periods for which the coin angle hits an odd
    multiple of pi/2 at sites that are odd multiples of q, producing
    perfectly reflecting coins and a walk confined to [-q, q].
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"q must be a positive integer, got {self.q}")
        if self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p}")
        if self.p % 2 == 0:
            raise ValueError(f"p must be odd, got {self.p}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got p={self.p}, q={self.q}")

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.p, 4 * self.q)

    @property
    def modulus(self) -> int:
        """Residue modulus 4q that governs every coin angle."""
        return 4 * self.q

    def canonical(self) -> "QuarterFraction":
        """Equivalent fraction with value in (0, 1); coins are identical."""
        return QuarterFraction(self.p % (4 * self.q), self.q)

    def complement(self) -> "QuarterFraction":
        """Quarter fraction for 1 - alpha (canonical form assumed)."""
        c = self.canonical()
        return QuarterFraction(4 * c.q - c.p, c.q)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "QuarterFraction":
        """Build from a reduced rational whose denominator is a multiple of 4."""
        if value.denominator % 4 != 0:
            raise ValueError(
                f"{value} is not of the form p/(4q); denominator must be divisible by 4"
            )
        return cls(value.numerator, value.denominator // 4)

    def __str__(self) -> str:
        return f"{self.p}/{4 * self.q}"


def _first_quadrant(r: int, q: int) -> tuple[float, float]:
    # 0 < r < q; fold onto [0, pi/4] so r and q-r yield swapped floats
    if 2 * r == q:
        return _ROOT_HALF, _ROOT_HALF
    if 2 * r < q:
        x = math.pi * r / (2.0 * q)
        return math.cos(x), math.sin(x)
    x = math.pi * (q - r) / (2.0 * q)
    return math.sin(x), math.cos(x)


def half_pi_cos_sin(k: int, q: int) -> tuple[float, float]:
    """(cos, sin) of k*pi/(2q), exact at quadrant boundaries.

    Exact cases: k mod 2q == 0 gives (+-1.0, 0.0) and k mod 2q == q
    gives (0.0, +-1.0), as literal floats with no rounding residue.
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    k %= 4 * q
    quadrant, r = divmod(k, q)
    if r == 0:
        return _BOUNDARY[quadrant]
    c, s = _first_quadrant(r, q)
    if quadrant == 0:
        return c, s
    if quadrant == 1:
        return -s, c
    if quadrant == 2:
        return -c, -s
    return s, -c


def fraction_cos_sin(turns: Fraction) -> tuple[float, float]:
    """(cos, sin) of 2*pi*turns for exact rational turns.

    Works for any denominator; quadrant boundaries are exact, so rational
    inverse periods whose denominator is not a multiple of 4 (which never
    produce reflecting coins) still evaluate consistently.
    """
    # 2*pi*(a/b) = (4a) * pi/(2b)
    return half_pi_cos_sin(4 * turns.numerator, turns.denominator)


def trig_pair_exact(f: QuarterFraction, n: int) -> tuple[float, float]:
    """(cos, sin) of 2*pi*(p/(4q))*n via integer residue reduction.

    The only rounding is the final in-quadrant cos/sin evaluation; at
    reflecting sites (p*n == q mod 2q) the cosine is bit-zero and the
    sine is exactly +-1.0.
    """
    return half_pi_cos_sin(f.p * n, f.q)
