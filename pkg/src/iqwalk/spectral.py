"""Finite one-step operators on the confinement interval.

For alpha = p/(4q) the walk restricted to [-q, q] is a 4q-dimensional
unitary.  The basis ordering is

    (-q; R), (-q+1; L), (-q+1; R), ..., (q-1; L), (q-1; R), (q; L)

which drops the identically-zero boundary components (-q; L) and
(q; R).  The coin factor is block diagonal with scalar corners
(-1)^((p+1)/2), the shift factor is a single 4q-cycle permutation, and
the coin-then-shift / shift-then-coin operators are the two orderings
of the same pair of factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .coins import unitarity_defect
from .errors import ConvergenceError
from .exact_trig import QuarterFraction, trig_pair_exact

__all__ = [
    "Spectrum",
    "PropertyCheck",
    "PropertyReport",
    "RESIDUAL_TOL",
    "SIMPLE_GAP_TOL",
    "build_matrices",
    "eigenvalues",
    "spectrum",
    "property_report",
    "gauge_check",
    "butterfly",
    "butterfly_fractions",
    "circular_arg_distance",
]

RESIDUAL_TOL = 1e-9
UNITARITY_PRE_TOL = 1e-10
UNIMODULAR_TOL = 1e-12
SIMPLE_GAP_TOL = 1e-6
DET_TOL = 1e-9


def _corner_sign(p: int) -> float:
    # sin(2*pi*(p/(4q))*(-q)) = (-1)^((p+1)/2) for odd p
    return 1.0 if ((p + 1) // 2) % 2 == 0 else -1.0


def _basis_index(q: int, n: int, chirality: str) -> int:
    if n == -q:
        if chirality != "R":
            raise ValueError("left component at -q is outside the restricted basis")
        return 0
    if n == q:
        if chirality != "L":
            raise ValueError("right component at q is outside the restricted basis")
        return 4 * q - 1
    if not -q < n < q:
        raise ValueError(f"site {n} outside [{-q}, {q}]")
    base = 2 * (n + q) - 1
    return base if chirality == "L" else base + 1


def build_matrices(f: QuarterFraction) -> tuple[np.ndarray, np.ndarray]:
    """(coin factor, shift factor) as dense 4q x 4q unitaries.

    Coin entries use exact residue trig, so reflecting blocks carry
    literal zeros.  The shift factor is a permutation matrix whose
    determinant is exactly -1; the coin factor has determinant 1.
    """
    q, p = f.q, f.p
    dim = 4 * q
    coin = np.zeros((dim, dim), dtype=complex)
    sign = _corner_sign(p)
    coin[0, 0] = sign
    coin[dim - 1, dim - 1] = sign
    for n in range(-q + 1, q):
        c, s = trig_pair_exact(f, n)
        i = _basis_index(q, n, "L")
        coin[i, i] = c
        coin[i, i + 1] = -s
        coin[i + 1, i] = s
        coin[i + 1, i + 1] = c
    shift = np.zeros((dim, dim), dtype=complex)
    shift[0, _basis_index(q, -q + 1, "L")] = 1.0
    shift[dim - 1, _basis_index(q, q - 1, "R")] = 1.0
    for n in range(-q + 1, q):
        up = dim - 1 if n + 1 == q else _basis_index(q, n + 1, "L")
        down = 0 if n - 1 == -q else _basis_index(q, n - 1, "R")
        shift[_basis_index(q, n, "L"), up] = 1.0
        shift[_basis_index(q, n, "R"), down] = 1.0
    det_coin = np.linalg.det(coin)
    det_shift = np.linalg.det(shift)
    if abs(det_coin - 1.0) > DET_TOL or abs(det_shift + 1.0) > DET_TOL:
        raise ConvergenceError(
            f"determinant check failed for {f}: "
            f"det(coin)={det_coin}, det(shift)={det_shift}"
        )
    return coin, shift


def eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of a unitary matrix, sorted by principal argument.

    Every eigenpair is verified against the residual contract
    ||M v - lambda v|| <= 1e-9; violations and solver failures raise
    ConvergenceError.  The input must be unitary within 1e-10.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    defect = unitarity_defect(m)
    if defect > UNITARITY_PRE_TOL:
        raise ValueError(f"matrix is not unitary (defect {defect:.3e})")
    try:
        values, vectors = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    residuals = np.linalg.norm(m @ vectors - vectors * values, axis=0)
    worst = float(residuals.max())
    if worst > RESIDUAL_TOL:
        raise ConvergenceError(
            f"eigenpair residual {worst:.3e} exceeds {RESIDUAL_TOL}"
        )
    drift = float(np.abs(np.abs(values) - 1.0).max())
    if drift > UNIMODULAR_TOL:
        raise ConvergenceError(
            f"eigenvalue modulus drifted {drift:.3e} from the unit circle"
        )
    return values[np.argsort(_principal_args(values), kind="stable")]


def _principal_args(values: np.ndarray) -> np.ndarray:
    # principal branch (-pi, pi]: fold the -pi edge (negative-zero imag) up
    args = np.angle(values)
    return np.where(args == -np.pi, np.pi, args)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of one finite walk operator, argument-sorted."""

    p: int
    q: int
    eigenvalues: np.ndarray
    args: np.ndarray

    @property
    def dim(self) -> int:
        return 4 * self.q

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.p, 4 * self.q)


def spectrum(f: QuarterFraction, order: str = "CW") -> Spectrum:
    """Spectrum of the one-step operator for the given factor order."""
    coin, shift = build_matrices(f)
    if order == "CW":
        m = coin @ shift
    elif order == "WC":
        m = shift @ coin
    else:
        raise ValueError(f"unknown operator order {order!r}")
    values = eigenvalues(m)
    return Spectrum(f.p, f.q, values, _principal_args(values))


def circular_arg_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Max pointwise circular gap between two sorted argument multisets.

    Sorted principal arguments of nearly-equal multisets can differ by
    a cyclic rotation when eigenvalues sit within rounding of the
    -pi/pi seam; a whole cluster may land on either side, so the best
    alignment over every cyclic shift is taken.  Quadratic in the list
    length, which stays cheap at the dimensions used here.
    """
    if len(a) != len(b):
        raise ValueError("argument lists differ in length")
    best = math.inf
    for roll in range(len(b)):
        d = np.abs(a - np.roll(b, roll))
        gap = float(np.minimum(d, 2.0 * np.pi - d).max())
        if gap < best:
            best = gap
    return best


@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    residual: float


@dataclass(frozen=True)
class PropertyReport:
    """Joint verdict on the five spectral properties plus determinant.

    Residuals are the deviations actually measured, not clamped to the
    tolerances.  simple_gap is the smallest pairwise eigenvalue
    distance; the simplicity check requires it above 1e-6.
    """

    p: int
    q: int
    alpha_reflection: PropertyCheck  # spectrum at alpha equals spectrum at 1 - alpha
    conjugation: PropertyCheck  # closed under complex conjugation
    negation: PropertyCheck  # closed under lambda -> -lambda
    simplicity: PropertyCheck  # all eigenvalues simple
    quartet: PropertyCheck  # 1, i, -1, -i always present
    det_ok: bool
    det_residual: float
    simple_gap: float

    def all_passed(self) -> bool:
        return (
            self.alpha_reflection.passed
            and self.conjugation.passed
            and self.negation.passed
            and self.simplicity.passed
            and self.quartet.passed
            and self.det_ok
        )


def _wrap_args(args: np.ndarray) -> np.ndarray:
    wrapped = np.mod(args + np.pi, 2.0 * np.pi) - np.pi
    return np.where(wrapped == -np.pi, np.pi, wrapped)


def property_report(f: QuarterFraction) -> PropertyReport:
    """Measure the five spectral properties of the shift-then-coin operator."""
    spec = spectrum(f, "CW")
    mirror = spectrum(f.canonical().complement(), "CW")
    r_reflect = circular_arg_distance(spec.args, mirror.args)
    r_conj = circular_arg_distance(spec.args, np.sort(-spec.args))
    r_neg = circular_arg_distance(spec.args, np.sort(_wrap_args(spec.args + np.pi)))
    diffs = np.abs(spec.eigenvalues[:, None] - spec.eigenvalues[None, :])
    gap = float(diffs[~np.eye(spec.dim, dtype=bool)].min())
    targets = np.array([1.0, 1.0j, -1.0, -1.0j])
    r_quartet = float(
        np.abs(spec.eigenvalues[None, :] - targets[:, None]).min(axis=1).max()
    )
    det_residual = float(abs(np.prod(spec.eigenvalues) + 1.0))
    return PropertyReport(
        p=f.p,
        q=f.q,
        alpha_reflection=PropertyCheck(r_reflect <= RESIDUAL_TOL, r_reflect),
        conjugation=PropertyCheck(r_conj <= RESIDUAL_TOL, r_conj),
        negation=PropertyCheck(r_neg <= RESIDUAL_TOL, r_neg),
        simplicity=PropertyCheck(gap > SIMPLE_GAP_TOL, gap),
        quartet=PropertyCheck(r_quartet <= RESIDUAL_TOL, r_quartet),
        det_ok=det_residual <= DET_TOL,
        det_residual=det_residual,
        simple_gap=gap,
    )


def gauge_check(f: QuarterFraction) -> float:
    """Max entry of |G (CW) G^-1 + CW| for the parity gauge G = diag((-1)^n).

    The operator only couples neighbouring sites, so the gauge flip of
    every nonzero entry is exact and the returned value must be 0.0
    with no tolerance.
    """
    coin, shift = build_matrices(f)
    cw = coin @ shift
    signs = np.empty(4 * f.q)
    signs[0] = 1.0 if (-f.q) % 2 == 0 else -1.0
    signs[-1] = 1.0 if f.q % 2 == 0 else -1.0
    for n in range(-f.q + 1, f.q):
        parity = 1.0 if n % 2 == 0 else -1.0
        i = _basis_index(f.q, n, "L")
        signs[i] = parity
        signs[i + 1] = parity
    conjugated = signs[:, None] * cw * signs[None, :]
    return float(np.abs(conjugated + cw).max())


def butterfly_fractions(q_max: int) -> Iterator[QuarterFraction]:
    """All quarter fractions with q <= q_max in deterministic (q, p) order."""
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    for q in range(1, q_max + 1):
        for p in range(1, 4 * q, 2):
            if math.gcd(p, q) == 1:
                yield QuarterFraction(p, q)


def butterfly(q_max: int) -> Iterator[Spectrum]:
    """Spectra of every quarter fraction with q <= q_max, (q, p)-ordered.

    Each (p, q) job is a pure function of its fraction, so callers may
    fan the sweep out and merge by the same deterministic order.
    """
    for f in butterfly_fractions(q_max):
        yield spectrum(f, "CW")
