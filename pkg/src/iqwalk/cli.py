"""Command-line interface.

Eight subcommands: evolve, spectrum, butterfly, approximate,
duality-check, properties, recurrence, spread.  Outputs are written
atomically (temp file + rename) and are byte-identical for identical
configurations: no timestamps, floats rendered with repr, JSON keys
sorted.  Every file starts with a metadata block recording the alpha
argument as typed, the seed, and the tool version.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 property
violation.  One-line reasons go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import __version__
from .analysis import recurrence_series, spread_exponent
from .coins import CoinSchedule, RandomSchedule, RotationalSchedule
from .diophantine import quarter_approximants
from .duality import verify_duality
from .errors import (
    ConvergenceError,
    EmptySupportError,
    IndecisiveError,
    IQWalkError,
    LeakageError,
    NoApproximantFoundError,
    NumericalDriftError,
    PrecisionExhaustedError,
    RationalInputError,
    UsageError,
)
from .exact_trig import QuarterFraction
from .precision import NAMED_CONSTANTS, RealEnclosure
from .spectral import butterfly, gauge_check, property_report, spectrum
from .walk import DEFAULT_SPINOR, distribution, evolve

__all__ = ["RunConfig", "parse_args", "execute", "main"]

OUTPUT_DIR_ENV = "IQWALK_OUTPUT_DIR"
NAMED_DIGITS = 40
DUALITY_GATE = 1e-12

_USAGE_EXIT = 1
_NUMERICAL_EXIT = 2
_VIOLATION_EXIT = 3


@dataclass(frozen=True)
class ParsedAlpha:
    """One --alpha value in every representation a command may need."""

    source_text: str
    quarter: QuarterFraction | None
    walk_value: object  # QuarterFraction | Fraction | RealEnclosure
    enclosure: RealEnclosure


def parse_alpha(text: str) -> ParsedAlpha:
    """Parse an --alpha value: p/(4q) fraction, decimal, or named constant.

    Fractions whose literal denominator is a multiple of 4 must have an
    odd, coprime numerator (the quarter-fraction family); other
    fractions are general rationals.  Decimals are exact rationals for
    walk commands but +-1 unit in the last place for approximation.
    """
    text = text.strip()
    if text in NAMED_CONSTANTS:
        enc = NAMED_CONSTANTS[text](NAMED_DIGITS)
        return ParsedAlpha(text, None, enc, enc)
    if "/" in text:
        num_text, _, den_text = text.partition("/")
        try:
            num, den = int(num_text), int(den_text)
        except ValueError:
            raise UsageError(f"malformed fraction {text!r}") from None
        if den <= 0 or num <= 0:
            raise UsageError(f"alpha must be a positive fraction, got {text!r}")
        if den % 4 == 0:
            q = den // 4
            if num % 2 == 0:
                raise UsageError(
                    f"alpha {text!r}: numerator of p/(4q) must be odd, got p={num}"
                )
            if math.gcd(num, q) != 1:
                raise UsageError(
                    f"alpha {text!r}: p and q must be coprime, "
                    f"got p={num}, q={q} with gcd {math.gcd(num, q)}"
                )
            f = QuarterFraction(num, q)
            return ParsedAlpha(
                text, f, f, RealEnclosure.from_fraction(f.alpha, text)
            )
        value = Fraction(num, den)
        return ParsedAlpha(text, None, value, RealEnclosure.from_fraction(value, text))
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(
            f"cannot parse alpha {text!r}; expected p/(4q), a decimal, "
            f"or one of {sorted(NAMED_CONSTANTS)}"
        ) from None
    if value <= 0:
        raise UsageError(f"alpha must be positive, got {text!r}")
    return ParsedAlpha(
        text, None, value, RealEnclosure.from_decimal(text, uncertainty_last_place=1)
    )


@dataclass(frozen=True)
class RunConfig:
    """Fully validated invocation; identical configs give identical bytes."""

    command: str
    alpha: ParsedAlpha | None
    steps: int
    q_max: int
    theta: float
    count: int
    seed: int | None
    coins: str
    initial: tuple[complex, complex]
    output: str
    format: str


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2; here 2 means numerical failure
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


_NATURAL_FORMAT = {
    "evolve": "csv",
    "spectrum": "json",
    "butterfly": "csv",
    "approximate": "json",
    "duality-check": "json",
    "properties": "json",
    "recurrence": "csv",
    "spread": "json",
}


def _build_parser() -> _Parser:
    parser = _Parser(prog="iqwalk", allow_abbrev=False, description=__doc__)
    parser.add_argument("--version", action="version", version=f"iqwalk {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name: str, help_text: str, *, alpha=False, walk=False, qmax=False):
        s = sub.add_parser(name, help=help_text, allow_abbrev=False)
        if alpha:
            s.add_argument("--alpha", required=True, help="p/(4q), decimal, pi/2, golden")
        if walk:
            s.add_argument("--steps", type=int, default=1000)
            s.add_argument(
                "--coins",
                choices=("rotational", "random"),
                default="rotational",
                help="coin family; random draws Haar coins keyed by --seed",
            )
            s.add_argument("--seed", type=int, default=None)
            s.add_argument(
                "--initial",
                nargs=2,
                metavar=("LEFT", "RIGHT"),
                default=None,
                help="initial chirality spinor, e.g. --initial 0.6 0.8j",
            )
        if qmax:
            s.add_argument("--qmax", "--q-max", dest="q_max", type=int, default=50)
        s.add_argument("--output", default=None, help="output path")
        s.add_argument("--format", choices=("csv", "json"), default=None)
        return s

    add("evolve", "evolve a walker and write its distribution", alpha=True, walk=True)
    add("spectrum", "eigenvalues of the finite walk operator", alpha=True)
    add("butterfly", "spectra for every quarter fraction up to q-max", qmax=True)
    approx = add("approximate", "certified quarter-fraction approximants", alpha=True)
    approx.add_argument("--count", type=int, default=3)
    approx.add_argument("--qmax", "--q-max", dest="q_max", type=int, default=100_000)
    add("duality-check", "role-swap residuals on the ring", alpha=True)
    add("properties", "spectral property report", alpha=True)
    add("recurrence", "origin probability over time", alpha=True, walk=True)
    spread = add("spread", "spread growth and fitted exponent", alpha=True, walk=True)
    spread.add_argument("--theta", type=float, default=0.5)
    return parser


def _parse_spinor(raw: Sequence[str] | None) -> tuple[complex, complex]:
    if raw is None:
        return DEFAULT_SPINOR
    try:
        left, right = (complex(part) for part in raw)
    except ValueError:
        raise UsageError(f"cannot parse spinor components {raw!r}") from None
    nrm = math.sqrt(abs(left) ** 2 + abs(right) ** 2)
    if abs(nrm - 1.0) > 1e-12:
        raise UsageError(f"initial spinor must have unit norm, got norm {nrm!r}")
    return left, right


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Strictly validate argv into a RunConfig; raises UsageError."""
    ns = _build_parser().parse_args(list(argv))
    command = ns.command
    fmt = ns.format or _NATURAL_FORMAT[command]
    if fmt != _NATURAL_FORMAT[command]:
        raise UsageError(
            f"{command} writes {_NATURAL_FORMAT[command]}, not {fmt}"
        )
    alpha = parse_alpha(ns.alpha) if getattr(ns, "alpha", None) else None
    coins = getattr(ns, "coins", "rotational")
    seed = getattr(ns, "seed", None)
    if coins == "random" and seed is None:
        raise UsageError("--coins random requires --seed")
    steps = getattr(ns, "steps", 0)
    if steps < 0:
        raise UsageError(f"--steps must be non-negative, got {steps}")
    q_max = getattr(ns, "q_max", 0)
    if q_max < 1 and command in ("butterfly", "approximate"):
        raise UsageError(f"--q-max must be positive, got {q_max}")
    count = getattr(ns, "count", 3)
    if command == "approximate" and count < 1:
        raise UsageError(f"--count must be positive, got {count}")
    theta = getattr(ns, "theta", 0.5)
    if command in ("spectrum", "duality-check", "properties") and alpha.quarter is None:
        raise UsageError(
            f"{command} requires a quarter fraction p/(4q), got {alpha.source_text!r}"
        )
    output = ns.output
    if output is None:
        base = os.environ.get(OUTPUT_DIR_ENV, ".")
        output = os.path.join(base, f"{command}.{fmt}")
    return RunConfig(
        command=command,
        alpha=alpha,
        steps=steps,
        q_max=q_max,
        theta=theta,
        count=count,
        seed=seed,
        coins=coins,
        initial=_parse_spinor(getattr(ns, "initial", None)),
        output=output,
        format=fmt,
    )


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".iqwalk-tmp-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _meta(config: RunConfig) -> dict:
    return {
        "tool": f"iqwalk {__version__}",
        "command": config.command,
        "alpha": config.alpha.source_text if config.alpha else None,
        "seed": config.seed,
    }


def _csv_text(config: RunConfig, header: Sequence[str], rows) -> str:
    lines = [f"# {key}: {value}" for key, value in sorted(_meta(config).items())]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(repr(x) if isinstance(x, float) else str(x) for x in row))
    return "\n".join(lines) + "\n"


def _json_text(config: RunConfig, payload: dict) -> str:
    return json.dumps(
        {"meta": _meta(config), **payload}, sort_keys=True, indent=2
    ) + "\n"


def _schedule(config: RunConfig) -> CoinSchedule:
    if config.coins == "random":
        return RandomSchedule(config.seed)
    return RotationalSchedule(config.alpha.walk_value)


def _run_evolve(config: RunConfig) -> tuple[str, int]:
    state = evolve(config.initial, _schedule(config), config.steps)
    rows = [
        (site, probs[0], probs[1], probs[2])
        for site, probs in distribution(state).items()
    ]
    return _csv_text(config, ("n", "prob_L", "prob_R", "prob"), rows), 0


def _run_spectrum(config: RunConfig) -> tuple[str, int]:
    spec = spectrum(config.alpha.quarter, "CW")
    payload = {
        "p": spec.p,
        "q": spec.q,
        "alpha": float(config.alpha.quarter.alpha),
        "eigenvalues": [
            {"re": float(v.real), "im": float(v.imag), "arg": float(a)}
            for v, a in zip(spec.eigenvalues, spec.args)
        ],
    }
    return _json_text(config, payload), 0


def _run_butterfly(config: RunConfig) -> tuple[str, int]:
    def rows():
        for spec in butterfly(config.q_max):
            alpha = float(spec.alpha)
            for arg in spec.args:
                yield (alpha, spec.p, spec.q, float(arg))

    return _csv_text(config, ("alpha", "p", "q", "arg"), rows()), 0


def _run_approximate(config: RunConfig) -> tuple[str, int]:
    found = quarter_approximants(
        config.alpha.enclosure, count=config.count, q_max=config.q_max
    )
    payload = {
        "approximants": [
            {
                "p": a.fraction.p,
                "q": a.fraction.q,
                "value": float(a.fraction.alpha),
                "certified": a.certified,
                "error": abs(
                    float(config.alpha.enclosure.midpoint - a.fraction.alpha)
                ),
            }
            for a in found
        ]
    }
    return _json_text(config, payload), 0


def _run_duality_check(config: RunConfig) -> tuple[str, int]:
    residuals = verify_duality(config.alpha.quarter)
    passed = residuals.max() <= DUALITY_GATE
    payload = {
        "p": config.alpha.quarter.p,
        "q": config.alpha.quarter.q,
        "shift_as_coin": residuals.shift_as_coin,
        "coin_as_shift": residuals.coin_as_shift,
        "tolerance": DUALITY_GATE,
        "passed": passed,
    }
    return _json_text(config, payload), 0 if passed else _VIOLATION_EXIT


def _run_properties(config: RunConfig) -> tuple[str, int]:
    report = property_report(config.alpha.quarter)
    gauge = gauge_check(config.alpha.quarter)
    spec = spectrum(config.alpha.quarter, "CW")
    checks = {
        "alpha_reflection": report.alpha_reflection,
        "conjugation": report.conjugation,
        "negation": report.negation,
        "simplicity": report.simplicity,
        "quartet": report.quartet,
    }
    payload = {
        "p": report.p,
        "q": report.q,
        "args": [float(a) for a in spec.args],
        "checks": {
            name: {"passed": check.passed, "residual": check.residual}
            for name, check in checks.items()
        },
        "det_ok": report.det_ok,
        "det_residual": report.det_residual,
        "simple_gap": report.simple_gap,
        "gauge_residual": gauge,
        "all_passed": report.all_passed() and gauge == 0.0,
    }
    ok = report.all_passed() and gauge == 0.0
    return _json_text(config, payload), 0 if ok else _VIOLATION_EXIT


def _run_recurrence(config: RunConfig) -> tuple[str, int]:
    series = recurrence_series(_schedule(config), config.steps, config.initial)
    return _csv_text(config, ("t", "prob_origin"), series), 0


def _run_spread(config: RunConfig) -> tuple[str, int]:
    if config.steps < 8:
        raise UsageError("spread needs --steps of at least 8")
    checkpoints = sorted({max(1, config.steps * k // 8) for k in range(1, 9)})
    estimate = spread_exponent(
        _schedule(config), checkpoints, config.initial, theta=config.theta
    )
    payload = {
        "times": list(estimate.times),
        "sigmas": list(estimate.sigmas),
        "fitted_exponent": estimate.fitted_exponent,
        "theta": estimate.theta,
        "scaled_tail": list(estimate.scaled_tail),
    }
    return _json_text(config, payload), 0


_RUNNERS = {
    "evolve": _run_evolve,
    "spectrum": _run_spectrum,
    "butterfly": _run_butterfly,
    "approximate": _run_approximate,
    "duality-check": _run_duality_check,
    "properties": _run_properties,
    "recurrence": _run_recurrence,
    "spread": _run_spread,
}


def execute(config: RunConfig) -> int:
    """Run one validated command; writes its output file atomically."""
    text, code = _RUNNERS[config.command](config)
    _atomic_write(config.output, text)
    print(config.output)
    return code


_NUMERICAL_ERRORS = (
    NumericalDriftError,
    ConvergenceError,
    PrecisionExhaustedError,
    IndecisiveError,
    NoApproximantFoundError,
    EmptySupportError,
)


def main(argv: Sequence[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_args(argv)
    except (UsageError, RationalInputError) as exc:
        print(f"iqwalk: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    try:
        return execute(config)
    except (UsageError, RationalInputError) as exc:
        print(f"iqwalk: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except _NUMERICAL_ERRORS as exc:
        print(f"iqwalk: numerical failure: {exc}", file=sys.stderr)
        return _NUMERICAL_EXIT
    except LeakageError as exc:
        print(f"iqwalk: property violation: {exc}", file=sys.stderr)
        return _VIOLATION_EXIT
    except OSError as exc:
        print(f"iqwalk: cannot write output: {exc}", file=sys.stderr)
        return _USAGE_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
