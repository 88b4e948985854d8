import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iqwalk import (
    ConvergenceError,
    QuarterFraction,
    build_matrices,
    butterfly,
    butterfly_fractions,
    circular_arg_distance,
    eigenvalues,
    gauge_check,
    property_report,
    spectrum,
    unitarity_defect,
)

QUARTET = np.array([1.0, 1.0j, -1.0, -1.0j])


def quarter_fractions(q_max=12):
    def build(draw):
        q = draw(st.integers(min_value=1, max_value=q_max))
        p = draw(st.integers(min_value=0, max_value=2 * q - 1)) * 2 + 1
        if math.gcd(p, q) != 1:
            p = 1
        return QuarterFraction(p, q)

    return st.composite(build)()


class TestBuildMatrices:
    def test_smallest_case_is_literal(self):
        coin, shift = build_matrices(QuarterFraction(1, 1))
        assert np.array_equal(coin, np.diag([-1.0, 1.0, 1.0, -1.0]))
        expected_shift = np.zeros((4, 4))
        expected_shift[0, 1] = 1.0
        expected_shift[1, 3] = 1.0
        expected_shift[2, 0] = 1.0
        expected_shift[3, 2] = 1.0
        assert np.array_equal(shift, expected_shift)

    @pytest.mark.parametrize("p,q,corner", [(1, 3, -1.0), (3, 5, 1.0), (5, 2, -1.0)])
    def test_corner_sign(self, p, q, corner):
        coin, _ = build_matrices(QuarterFraction(p, q))
        assert coin[0, 0] == corner
        assert coin[-1, -1] == corner

    @given(quarter_fractions())
    @settings(max_examples=25)
    def test_factors_are_unitary(self, f):
        coin, shift = build_matrices(f)
        assert coin.shape == (4 * f.q, 4 * f.q)
        assert unitarity_defect(coin) <= 1e-15
        assert unitarity_defect(shift) == 0.0

    @pytest.mark.parametrize("p,q", [(1, 3), (3, 5), (7, 6)])
    def test_reflections_only_at_the_corners(self, p, q):
        # zero cosines sit at n = q mod 2q, so interior blocks never reflect
        coin, _ = build_matrices(QuarterFraction(p, q))
        assert abs(coin[0, 0]) == 1.0
        assert abs(coin[-1, -1]) == 1.0
        for n in range(-q + 1, q):
            i = 2 * (n + q) - 1
            assert coin[i, i] != 0.0


class TestEigenvalues:
    def test_identity(self):
        vals = eigenvalues(np.eye(5))
        assert np.array_equal(vals, np.ones(5, dtype=complex))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            eigenvalues(np.zeros((2, 3)))

    def test_rejects_non_unitary(self):
        with pytest.raises(ValueError, match="not unitary"):
            eigenvalues(2.0 * np.eye(3))

    def test_sorted_by_principal_arg(self):
        vals = eigenvalues(np.diag([-1.0, 1.0j, 1.0, -1.0j]).astype(complex))
        assert np.allclose(vals, QUARTET[np.argsort([0, np.pi / 2, np.pi, -np.pi / 2])])
        args = np.angle(vals)
        assert list(args) == sorted(args)
        assert args[-1] == pytest.approx(np.pi)  # -pi folds to +pi

    def test_solver_failure_is_wrapped(self, monkeypatch):
        def explode(_):
            raise np.linalg.LinAlgError("did not converge")

        monkeypatch.setattr(np.linalg, "eig", explode)
        with pytest.raises(ConvergenceError, match="eigensolver failed"):
            eigenvalues(np.eye(4))

    def test_bad_eigenpairs_are_rejected(self, monkeypatch):
        real_eig = np.linalg.eig

        def skewed(m):
            values, vectors = real_eig(m)
            return values + 0.1, vectors

        monkeypatch.setattr(np.linalg, "eig", skewed)
        with pytest.raises(ConvergenceError, match="residual"):
            eigenvalues(np.eye(4))

    def test_off_circle_eigenvalues_are_rejected(self, monkeypatch):
        # zero vectors defeat the residual check, the modulus gate remains
        monkeypatch.setattr(
            np.linalg,
            "eig",
            lambda m: (1.5 * np.ones(len(m), dtype=complex), np.zeros_like(m)),
        )
        with pytest.raises(ConvergenceError, match="modulus"):
            eigenvalues(np.eye(4))


class TestSpectrum:
    def test_smallest_case_matches_hand_oracle(self):
        # coin @ shift for p=q=1, written out entry by entry
        hand = np.array(
            [
                [0.0, -1.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, -1.0, 0.0],
            ],
            dtype=complex,
        )
        coin, shift = build_matrices(QuarterFraction(1, 1))
        assert np.array_equal(coin @ shift, hand)
        spec = spectrum(QuarterFraction(1, 1))
        expected_args = np.array([-np.pi / 2, 0.0, np.pi / 2, np.pi])
        assert np.allclose(spec.args, expected_args, atol=1e-9)
        hand_args = np.sort(np.angle(np.linalg.eigvals(hand)))
        assert circular_arg_distance(spec.args, hand_args) <= 1e-9

    def test_quartet_membership(self):
        spec = spectrum(QuarterFraction(1, 3))
        for target in QUARTET:
            assert np.abs(spec.eigenvalues - target).min() <= 1e-9

    def test_metadata(self):
        spec = spectrum(QuarterFraction(3, 5))
        assert (spec.p, spec.q, spec.dim) == (3, 5, 20)
        assert spec.alpha == Fraction(3, 20)
        assert len(spec.eigenvalues) == 20

    @given(quarter_fractions(q_max=8))
    @settings(max_examples=20)
    def test_factor_order_does_not_move_the_spectrum(self, f):
        cw = spectrum(f, "CW")
        wc = spectrum(f, "WC")
        assert circular_arg_distance(cw.args, wc.args) <= 1e-9

    def test_unknown_order(self):
        with pytest.raises(ValueError, match="order"):
            spectrum(QuarterFraction(1, 1), "CS")

    def test_eigenvector_transport_between_orders(self):
        # shift factor carries eigenvectors of coin@shift to shift@coin
        coin, shift = build_matrices(QuarterFraction(3, 5))
        values, vectors = np.linalg.eig(coin @ shift)
        wc = shift @ coin
        for k in range(len(values)):
            moved = shift @ vectors[:, k]
            assert np.linalg.norm(wc @ moved - values[k] * moved) <= 1e-8


class TestPropertyReport:
    @pytest.mark.parametrize("p,q", [(1, 1), (1, 3), (3, 5), (7, 2)])
    def test_all_properties_hold(self, p, q):
        report = property_report(QuarterFraction(p, q))
        assert (report.p, report.q) == (p, q)
        assert report.all_passed()
        for check in (
            report.alpha_reflection,
            report.conjugation,
            report.negation,
            report.quartet,
        ):
            assert check.passed
            assert check.residual <= 1e-9
        assert report.simplicity.passed
        assert report.det_ok
        assert report.det_residual <= 1e-9

    def test_smallest_gap_is_root_two(self):
        report = property_report(QuarterFraction(1, 1))
        assert report.simple_gap == pytest.approx(math.sqrt(2.0), abs=1e-9)


class TestGauge:
    @pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (7, 9)])
    def test_parity_gauge_flips_the_operator_exactly(self, p, q):
        assert gauge_check(QuarterFraction(p, q)) == 0.0


class TestButterfly:
    def test_fraction_order(self):
        assert [(f.p, f.q) for f in butterfly_fractions(2)] == [
            (1, 1),
            (3, 1),
            (1, 2),
            (3, 2),
            (5, 2),
            (7, 2),
        ]

    def test_fraction_count(self):
        # odd q contributes 2*phi(q) fractions, even q contributes 4*phi(q)
        assert sum(1 for _ in butterfly_fractions(10)) == 90

    def test_rejects_bad_q_max(self):
        with pytest.raises(ValueError, match="q_max"):
            list(butterfly_fractions(0))

    def test_spectra_follow_the_fraction_order(self):
        specs = list(butterfly(1))
        assert [(s.p, s.q) for s in specs] == [(1, 1), (3, 1)]
        direct = spectrum(QuarterFraction(1, 1))
        assert np.array_equal(specs[0].args, direct.args)

    def test_reflection_pairing_across_the_sweep(self):
        specs = {(s.p, s.q): s for s in butterfly(3)}
        for (p, q), spec in specs.items():
            partner = specs[(4 * q - p, q)]
            assert circular_arg_distance(spec.args, partner.args) <= 1e-9


class TestCircularArgDistance:
    def test_seam_rotation_is_recognized(self):
        a = np.array([-np.pi + 1e-10, 0.0])
        b = np.array([0.0, np.pi - 1e-10])
        assert float(np.abs(a - b).max()) > 1.0
        assert circular_arg_distance(a, b) <= 1e-9

    def test_plain_case(self):
        a = np.array([0.0, 1.0, 2.0])
        assert circular_arg_distance(a, a) == 0.0

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            circular_arg_distance(np.zeros(3), np.zeros(4))
