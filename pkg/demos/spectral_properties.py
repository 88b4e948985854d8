#!/usr/bin/env python3
"""Verify the five spectral properties of the confined walk operator.

For every admissible p/(4q) the 4q eigenvalues are unimodular and
 - the argument list at alpha matches the one at 1 - alpha,
 - the spectrum is closed under complex conjugation,
 - the spectrum is closed under negation (chiral pairs),
 - all eigenvalues are distinct,
 - +1, -1, +i, -i always appear,
and the eigenvalue product is exactly -1.  The parity gauge behind the
chiral pairing is also checked: conjugating the operator by diag((-1)^n)
flips its sign with zero floating-point error, because the operator only
couples sites of opposite parity.

The distinctness check is the interesting one numerically.  Gaps
between neighboring eigenvalues can tunnel below any fixed threshold as
q grows (weakly coupled cells split by amounts that shrink roughly
exponentially with the cell size), so the report carries the measured
minimum gap rather than clamping it to a verdict.
"""

from iqwalk import QuarterFraction, butterfly_fractions, gauge_check, property_report

Q_MAX = 12

SHOWCASE = [QuarterFraction(3, 19), QuarterFraction(3, 49)]


def main():
    worst = {"alpha-reflection": 0.0, "conjugation": 0.0, "negation": 0.0,
             "quartet": 0.0, "determinant": 0.0}
    min_gap, min_gap_at = float("inf"), None
    count = 0
    for f in butterfly_fractions(Q_MAX):
        report = property_report(f)
        assert report.all_passed(), f"{f}: {report}"
        assert gauge_check(f) == 0.0
        worst["alpha-reflection"] = max(worst["alpha-reflection"],
                                        report.alpha_reflection.residual)
        worst["conjugation"] = max(worst["conjugation"], report.conjugation.residual)
        worst["negation"] = max(worst["negation"], report.negation.residual)
        worst["quartet"] = max(worst["quartet"], report.quartet.residual)
        worst["determinant"] = max(worst["determinant"], report.det_residual)
        if report.simple_gap < min_gap:
            min_gap, min_gap_at = report.simple_gap, f
        count += 1

    print(f"all five properties hold for every alpha with q <= {Q_MAX} "
          f"({count} fractions); gauge residual exactly 0.0 in all cases")
    print("worst residuals:")
    for name, value in worst.items():
        print(f"  {name:17s} {value:.3e}")
    print(f"smallest eigenvalue gap {min_gap:.3e} at alpha = {min_gap_at}\n")

    print("measured minimum gaps at weakly coupled points:")
    for f in SHOWCASE:
        report = property_report(f)
        verdict = "pass" if report.simplicity.passed else "below 1e-6 gate"
        print(f"  alpha = {f!s:7s} gap {report.simple_gap:.3e}  ({verdict})")
    print("\nthe gaps are genuine near-degeneracies, not solver noise: the")
    print("operator is unitary, hence normal, so eigenvalue error is bounded")
    print("by the ~1e-14 backward error of the dense eigensolver")


if __name__ == "__main__":
    main()
