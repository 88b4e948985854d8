import itertools
import math
from fractions import Fraction

import pytest
import sympy

from iqwalk import (
    ContinuedFraction,
    IndecisiveError,
    NoApproximantFoundError,
    PrecisionExhaustedError,
    QuarterFraction,
    RationalInputError,
    RealEnclosure,
    continued_fraction,
    convergents,
    golden_mean,
    pi_half,
    quarter_approximants,
    sqrt2_minus_one,
    verify_bound,
)
from oracles import brute_force_quarter_approximants, mp_cos_sin

IRRATIONALS = {
    "pi/2": pi_half,
    "golden": golden_mean,
    "sqrt2-1": sqrt2_minus_one,
}


class TestContinuedFraction:
    def test_rational_point_terminates(self):
        cf = continued_fraction(RealEnclosure.from_fraction(Fraction(3, 2)))
        assert cf.a0 == 1
        assert cf.partial_quotients == (2,)
        assert cf.terminated

    def test_integer_point(self):
        cf = continued_fraction(RealEnclosure.from_fraction(Fraction(1)))
        assert (cf.a0, cf.partial_quotients, cf.terminated) == (1, (), True)

    def test_golden_mean_is_all_ones(self):
        cf = continued_fraction(golden_mean(40), max_depth=30)
        assert cf.a0 == 0
        assert cf.partial_quotients == (1,) * 30
        assert not cf.terminated

    def test_integer_shift_only_moves_a0(self):
        g = golden_mean(40)
        shifted = RealEnclosure(g.lo + 1, g.hi + 1, "golden+1")
        cf = continued_fraction(shifted, max_depth=30)
        assert cf.a0 == 1
        assert cf.partial_quotients == (1,) * 30

    def test_half_pi_expansion_matches_symbolic_reference(self):
        cf = continued_fraction(pi_half(40))
        reference = list(
            itertools.islice(sympy.continued_fraction_iterator(sympy.pi / 2), 9)
        )
        assert cf.a0 == reference[0]
        assert len(cf.partial_quotients) >= 8
        assert list(cf.partial_quotients[:8]) == reference[1:9]

    def test_wide_enclosure_stops_early_without_error(self):
        g = golden_mean(40)
        blurred = RealEnclosure(g.lo, g.lo + Fraction(1, 10**6), "golden~1e-6")
        cf = continued_fraction(blurred)
        assert 5 <= len(cf.partial_quotients) < 40
        assert cf.partial_quotients == (1,) * len(cf.partial_quotients)
        assert not cf.terminated

    def test_remainder_touching_zero_stops(self):
        cf = continued_fraction(RealEnclosure(Fraction(2), Fraction(5, 2)))
        assert cf.a0 == 2
        assert cf.partial_quotients == ()
        assert not cf.terminated

    def test_undecided_integer_part(self):
        with pytest.raises(PrecisionExhaustedError, match="integer part"):
            continued_fraction(RealEnclosure(Fraction(9, 10), Fraction(11, 10)))

    def test_undecided_sign(self):
        with pytest.raises(PrecisionExhaustedError, match="sign"):
            continued_fraction(RealEnclosure(Fraction(-1, 10), Fraction(1, 10)))

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError, match="positive"):
            continued_fraction(RealEnclosure.from_fraction(Fraction(-2)))
        with pytest.raises(ValueError):
            continued_fraction(golden_mean(40), max_depth=-1)

    def test_records_source_precision(self):
        g = golden_mean(40)
        assert continued_fraction(g).source_precision == g.certified_digits


class TestConvergents:
    def test_golden_convergents_are_fibonacci_ratios(self):
        cf = continued_fraction(golden_mean(40), max_depth=12)
        convs = convergents(cf)
        fib = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
        assert len(convs) == 13
        for conv, num, den in zip(convs, fib, fib[1:]):
            assert (conv.numerator, conv.denominator) == (num, den)
            assert conv.error_bound_ok

    def test_rational_expansion_recovers_the_value(self):
        cf = continued_fraction(RealEnclosure.from_fraction(Fraction(3, 2)))
        convs = convergents(cf)
        assert [c.value for c in convs] == [Fraction(1), Fraction(3, 2)]
        assert all(c.error_bound_ok for c in convs)

    def test_dirichlet_flag_is_exact(self):
        # 7/5 = [1; 2, 2]: truncating at 1/1 leaves error 2/5 > 1/1^2? no,
        # 2/5 < 1 -- but truncating [1; 2] = 3/2 leaves 1/10 > 1/4? no.
        # use a wide *enclosure* instead: sup distance ruins the flag
        wide = RealEnclosure(Fraction(1), Fraction(2))
        cf = ContinuedFraction(1, (), 0, False, wide)
        (only,) = convergents(cf)
        assert only.value == 1
        assert not only.error_bound_ok


class TestVerifyBound:
    def test_exact_match_passes(self):
        assert verify_bound(
            RealEnclosure.from_fraction(Fraction(1, 4)), QuarterFraction(1, 1)
        )

    def test_distant_fraction_fails(self):
        assert not verify_bound(
            RealEnclosure.from_fraction(Fraction(1, 4)), QuarterFraction(3, 1)
        )

    def test_wide_enclosure_is_indecisive(self):
        with pytest.raises(IndecisiveError, match="too coarse"):
            verify_bound(RealEnclosure(Fraction(0), Fraction(1)), QuarterFraction(1, 1))

    def test_threshold_width(self):
        # width exactly 1/(8 q^2) must already refuse
        enc = RealEnclosure(Fraction(1, 4), Fraction(1, 4) + Fraction(1, 8))
        with pytest.raises(IndecisiveError):
            verify_bound(enc, QuarterFraction(1, 1))


class TestQuarterApproximants:
    @pytest.mark.parametrize("key", sorted(IRRATIONALS))
    def test_matches_exhaustive_search(self, key):
        enc = IRRATIONALS[key](40)
        ours = quarter_approximants(enc, count=3)
        assert [a.certified for a in ours] == [True] * 3
        expected = brute_force_quarter_approximants(enc.lo, enc.hi, 3, 400)
        assert [(a.fraction.p, a.fraction.q) for a in ours] == expected

    @pytest.mark.parametrize("key", sorted(IRRATIONALS))
    def test_more_terms_refine_not_replace(self, key):
        enc = IRRATIONALS[key](40)
        full = quarter_approximants(enc, count=3)
        for k in (1, 2):
            assert quarter_approximants(enc, count=k) == full[:k]

    @pytest.mark.parametrize("key", sorted(IRRATIONALS))
    def test_coin_is_nearly_reflecting_at_q(self, key):
        # the certified bound forces |cos| < pi/(2q) at the boundary site
        enc = IRRATIONALS[key](40)
        for approx in quarter_approximants(enc, count=3):
            q = approx.fraction.q
            cos_q, _ = mp_cos_sin(key, q)
            assert abs(cos_q) < math.pi / (2 * q)

    def test_each_approximant_reverifies(self):
        enc = golden_mean(40)
        for approx in quarter_approximants(enc, count=3):
            assert verify_bound(enc, approx.fraction)

    def test_known_golden_prefix(self):
        ours = quarter_approximants(golden_mean(40), count=2)
        assert [(a.fraction.p, a.fraction.q) for a in ours] == [(3, 1), (5, 2)]

    def test_alpha_above_one_is_fine(self):
        ours = quarter_approximants(pi_half(40), count=3)
        assert [(a.fraction.p, a.fraction.q) for a in ours] == [(7, 1), (13, 2), (19, 3)]

    def test_rational_point_is_rejected(self):
        with pytest.raises(RationalInputError, match="rational"):
            quarter_approximants(RealEnclosure.from_fraction(Fraction(1, 3)))

    def test_limited_precision_gives_short_list(self):
        g = golden_mean(40)
        blurred = RealEnclosure(g.lo, g.lo + Fraction(1, 1000), "golden~1e-3")
        short = quarter_approximants(blurred, count=3)
        assert [(a.fraction.p, a.fraction.q) for a in short] == [(3, 1), (5, 2)]

    def test_no_hit_within_q_max(self):
        # nothing certifies near 1/2: |2 - p/q| >= 1/q > 1/q^2 for odd p
        lo = Fraction(1, 2) + Fraction(1, 10**40)
        enc = RealEnclosure(lo, lo + Fraction(1, 10**45), "near-half")
        with pytest.raises(NoApproximantFoundError, match="q <= 50"):
            quarter_approximants(enc, count=1, q_max=50)

    def test_no_hit_because_precision_ran_out(self):
        enc = RealEnclosure(Fraction(1, 2), Fraction(1, 2) + Fraction(1, 80))
        with pytest.raises(NoApproximantFoundError, match="precision ran out"):
            quarter_approximants(enc, count=1, q_max=50)

    def test_validation(self):
        with pytest.raises(ValueError, match="count"):
            quarter_approximants(golden_mean(40), count=0)
        with pytest.raises(ValueError, match="q_max"):
            quarter_approximants(golden_mean(40), q_max=0)
