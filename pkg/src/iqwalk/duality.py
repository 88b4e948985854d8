"""Self-duality: the basis in which shift and coin exchange roles.

On the 4q-site ring the (not normalized) dual vectors

    |n, L~> = sum_m [ sin(2*pi*alpha*m*n) |m, L> + cos(2*pi*alpha*m*n) |m, R> ]
    |n, R~> = sum_m [ cos(2*pi*alpha*m*n) |m, L> + sin(2*pi*alpha*m*n) |m, R> ]

diagonalize the shift sitewise (the shift acts on them like a rotation
coin at site n) while the coin translates them by one dual site.  The
ring is a finite proxy for the infinite lattice: because every trig
argument reduces mod 4q exactly, the role-swap identities close on the
ring with no truncation error beyond double rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_trig import QuarterFraction, trig_pair_exact

__all__ = [
    "RingState",
    "DualVector",
    "DualityResiduals",
    "ring_shift",
    "ring_coin",
    "dual_vector",
    "verify_duality",
]


@dataclass(frozen=True)
class RingState:
    """Chirality amplitude pairs on the periodic ring Z_M."""

    amplitudes: np.ndarray  # (M, 2) complex

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 2 or amps.shape[1] != 2 or amps.shape[0] < 1:
            raise ValueError(f"amplitudes must have shape (M, 2), got {amps.shape}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def size(self) -> int:
        return len(self.amplitudes)


@dataclass(frozen=True)
class DualVector:
    """Dual basis vector |n, chirality~> expanded over ring sites.

    Not normalized; its squared norm is the trig sum over the ring.
    """

    f: QuarterFraction
    n: int
    chirality: str
    amplitudes: np.ndarray


def ring_shift(state: RingState) -> RingState:
    """Chirality-conditioned shift with periodic wrap-around."""
    left = np.roll(state.amplitudes[:, 0], -1)  # site m receives L from m+1
    right = np.roll(state.amplitudes[:, 1], 1)  # and R from m-1
    return RingState(np.column_stack([left, right]))


def ring_coin(f: QuarterFraction, state: RingState) -> RingState:
    """Sitewise rotation coins on the ring, exact residue trig."""
    m = state.size
    cos_vals = np.empty(m)
    sin_vals = np.empty(m)
    for site in range(m):
        cos_vals[site], sin_vals[site] = trig_pair_exact(f, site)
    left = state.amplitudes[:, 0]
    right = state.amplitudes[:, 1]
    return RingState(
        np.column_stack(
            [cos_vals * left - sin_vals * right, sin_vals * left + cos_vals * right]
        )
    )


def dual_vector(f: QuarterFraction, n: int, chirality: str) -> DualVector:
    """Dual basis vector at dual site n; periodic in n with period 4q."""
    if chirality not in ("L", "R"):
        raise ValueError(f"chirality must be 'L' or 'R', got {chirality!r}")
    size = 4 * f.q
    amps = np.zeros((size, 2), dtype=complex)
    for m in range(size):
        c, s = trig_pair_exact(f, m * n)
        if chirality == "L":
            amps[m, 0] = s
            amps[m, 1] = c
        else:
            amps[m, 0] = c
            amps[m, 1] = s
    return DualVector(f, n, chirality, amps)


@dataclass(frozen=True)
class DualityResiduals:
    """Worst-case residuals of the two role-swap identities on the ring."""

    shift_as_coin: float
    coin_as_shift: float

    def max(self) -> float:
        return max(self.shift_as_coin, self.coin_as_shift)


def verify_duality(f: QuarterFraction) -> DualityResiduals:
    """Check both role-swap identities for every dual site and chirality.

    shift_as_coin: the shift acts on |n, L~>, |n, R~> as the rotation
    coin with the site-n angle.  coin_as_shift: the coin maps |n, L~>
    to |n-1, L~> and |n, R~> to |n+1, R~>.  Residuals are max absolute
    amplitude deviations; for exact-boundary fractions such as q = 1
    they are exactly zero.
    """
    size = 4 * f.q
    duals_left = [dual_vector(f, n, "L").amplitudes for n in range(size)]
    duals_right = [dual_vector(f, n, "R").amplitudes for n in range(size)]
    worst_shift = 0.0
    worst_coin = 0.0
    for n in range(size):
        c, s = trig_pair_exact(f, n)
        shifted_left = ring_shift(RingState(duals_left[n])).amplitudes
        shifted_right = ring_shift(RingState(duals_right[n])).amplitudes
        forward = np.abs(shifted_left - (c * duals_left[n] + s * duals_right[n])).max()
        backward = np.abs(shifted_right - (c * duals_right[n] - s * duals_left[n])).max()
        worst_shift = max(worst_shift, float(forward), float(backward))
        coined_left = ring_coin(f, RingState(duals_left[n])).amplitudes
        coined_right = ring_coin(f, RingState(duals_right[n])).amplitudes
        to_prev = np.abs(coined_left - duals_left[(n - 1) % size]).max()
        to_next = np.abs(coined_right - duals_right[(n + 1) % size]).max()
        worst_coin = max(worst_coin, float(to_prev), float(to_next))
    return DualityResiduals(worst_shift, worst_coin)
