"""Long-time observables: confinement, barriers, recurrence, spreading."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .coins import CoinSchedule, RotationalSchedule
from .errors import LeakageError
from .exact_trig import QuarterFraction
from .walk import (
    DEFAULT_SPINOR,
    WalkerState,
    evolve,
    initial_state,
    moment_stats,
    origin_probability,
    step,
    support,
)

__all__ = [
    "LocalizationReport",
    "NearBarrierScan",
    "SpreadEstimate",
    "leaked_probability",
    "finite_support_verify",
    "barrier_positions",
    "near_barriers",
    "recurrence_series",
    "spread_exponent",
]


@dataclass(frozen=True)
class LocalizationReport:
    """Outcome of an exact-confinement run."""

    alpha_description: str
    predicted_interval: tuple[int, int] | None
    observed_support: tuple[int, int]
    leaked_probability: float
    steps: int


def leaked_probability(state: WalkerState, interval: tuple[int, int]) -> float:
    """Probability strictly outside [lo, hi]; raises on any nonzero amplitude.

    The check is exact: a single nonzero amplitude bit outside the
    interval raises LeakageError even if its probability underflows.
    """
    lo, hi = interval
    outside_rows = [
        i for i, n in enumerate(state.sites) if n < lo or n > hi
    ]
    if not outside_rows:
        return 0.0
    outside = state.amplitudes[outside_rows]
    if np.any(outside != 0):
        worst = float(np.abs(outside).max())
        raise LeakageError(
            f"amplitude {worst!r} escaped [{lo}, {hi}] at step {state.step_count}"
        )
    return 0.0


def finite_support_verify(
    f: QuarterFraction,
    steps: int,
    initial: tuple[complex, complex] = DEFAULT_SPINOR,
) -> LocalizationReport:
    """Evolve (coin-then-shift order) and prove the walk stayed in [-q, q]."""
    schedule = RotationalSchedule(f)
    state = evolve(initial, schedule, steps, order="WC")
    leak = leaked_probability(state, (-f.q, f.q))
    return LocalizationReport(
        alpha_description=str(f),
        predicted_interval=(-f.q, f.q),
        observed_support=support(state, 0.0),
        leaked_probability=leak,
        steps=steps,
    )


def barrier_positions(schedule: CoinSchedule, window: tuple[int, int]) -> list[int]:
    """Sites in [lo, hi] whose coin has an exactly zero diagonal.

    Exact zeros exist only for schedules built on exact trig (rational
    inverse periods with denominator 4q) or explicitly reflecting
    custom coins; irrational and Haar-random schedules return an empty
    list here, and `near_barriers` gives their empirical counterpart.
    """
    lo, hi = window
    if hi < lo:
        raise ValueError(f"empty window {window}")
    out = []
    for n in range(lo, hi + 1):
        coin = schedule.coin_at(n)
        if coin[0, 0] == 0 and coin[1, 1] == 0:
            out.append(n)
    return out


@dataclass(frozen=True)
class NearBarrierScan:
    """Empirical near-barrier sites; NOT a proof of confinement.

    Lists sites whose diagonal coin magnitude falls below `threshold`.
    Unlike `barrier_positions` this is a heuristic report: small
    diagonals slow the walk but do not reflect it exactly.
    """

    threshold: float
    sites: tuple[tuple[int, float], ...]
    rigorous: bool = False


def near_barriers(
    schedule: CoinSchedule, window: tuple[int, int], threshold: float = 1e-2
) -> NearBarrierScan:
    """Scan for sites where both coin diagonal magnitudes are below threshold."""
    lo, hi = window
    if hi < lo:
        raise ValueError(f"empty window {window}")
    hits = []
    for n in range(lo, hi + 1):
        coin = schedule.coin_at(n)
        size = max(abs(coin[0, 0]), abs(coin[1, 1]))
        if size < threshold:
            hits.append((n, float(size)))
    return NearBarrierScan(threshold=threshold, sites=tuple(hits))


def recurrence_series(
    schedule: CoinSchedule,
    t_max: int,
    initial: tuple[complex, complex] = DEFAULT_SPINOR,
    order: str = "WC",
) -> list[tuple[int, float]]:
    """Origin probability at every step 0..t_max from one evolution.

    Starting at the origin, odd steps give exactly 0.0 by parity for
    any schedule.
    """
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    state = initial_state(initial)
    series = [(0, origin_probability(state))]
    for t in range(1, t_max + 1):
        state = step(state, schedule, order)
        series.append((t, origin_probability(state)))
    return series


@dataclass(frozen=True)
class SpreadEstimate:
    """Spread growth measured at checkpoint times.

    fitted_exponent is the log-log least-squares slope of sigma(t) over
    the upper half of the checkpoint grid; scaled_tail[i] is
    E|X_t| / t**theta at the matching checkpoint.
    """

    times: tuple[int, ...]
    sigmas: tuple[float, ...]
    fitted_exponent: float
    theta: float
    scaled_tail: tuple[float, ...]


def spread_exponent(
    schedule: CoinSchedule,
    checkpoints: Sequence[int],
    initial: tuple[complex, complex] = DEFAULT_SPINOR,
    theta: float = 0.5,
    order: str = "WC",
) -> SpreadEstimate:
    """Track sigma(t) and E|X_t|/t^theta over one evolution."""
    times = sorted(set(int(t) for t in checkpoints))
    if not times or times[0] < 1:
        raise ValueError("checkpoints must be positive integers")
    state = initial_state(initial)
    sigmas: list[float] = []
    tails: list[float] = []
    want = set(times)
    for t in range(1, times[-1] + 1):
        state = step(state, schedule, order)
        if t in want:
            stats = moment_stats(state)
            sigmas.append(stats.std_dev)
            tails.append(stats.abs_moments[1] / t**theta)
    upper = len(times) // 2
    pairs = [
        (math.log(t), math.log(s))
        for t, s in zip(times[upper:], sigmas[upper:])
        if s > 0
    ]
    xs = [x for x, _ in pairs]
    ys = [y for _, y in pairs]
    if len(xs) >= 2:
        x_mean = sum(xs) / len(xs)
        y_mean = sum(ys) / len(ys)
        denom = sum((x - x_mean) ** 2 for x in xs)
        slope = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys)) / denom
    else:
        slope = math.nan
    return SpreadEstimate(
        times=tuple(times),
        sigmas=tuple(sigmas),
        fitted_exponent=slope,
        theta=theta,
        scaled_tail=tuple(tails),
    )
