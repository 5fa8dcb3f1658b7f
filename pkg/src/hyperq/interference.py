"""Closed-form interference laws and a regime classifier.

Two-path probability data can interfere in two structurally different ways:

    trigonometric:  P' = P1 + P2 + 2*sqrt(P1*P2) * cos(theta)
    hyperbolic:     P' = P1 + P2 +- 2*sqrt(P1*P2) * cosh(theta)

Both are linearizations of a squared modulus, the first over the ordinary
complex numbers, the second over the split-complex numbers, and the residual
helpers here verify those identities by evaluating both sides through
independent arithmetic.

Given a measured triple (P', P1, P2) the normalized interference
coefficient

    lambda = (P' - P1 - P2) / (2*sqrt(P1*P2))

decides the regime: |lambda| < 1 is reachable by a cosine, |lambda| > 1
only by a hyperbolic cosine, and a narrow band around |lambda| = 1 is
reported as the boundary where both laws coincide at theta = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import THETA_MAX, expj
from .errors import DegenerateInputsError, PhaseRangeError

__all__ = [
    "EPS_CLS",
    "TRIG",
    "HYP",
    "BOUNDARY",
    "InterferenceVerdict",
    "trig_law",
    "hyp_law",
    "trig_linearization_residual",
    "hyp_linearization_residual",
    "classify",
]

# half-width of the degenerate band around |lambda| = 1
EPS_CLS = 1e-9

TRIG = "trig"
HYP = "hyp"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class InterferenceVerdict:
    """Recovered regime, non-negative phase, term sign, and coefficient."""

    regime: str
    theta: float
    sign: int
    lambda_: float

    def to_json_dict(self) -> dict[str, object]:
        return {
            "regime": self.regime,
            "theta": self.theta,
            "sign": self.sign,
            "lambda": self.lambda_,
        }


def _check_probability_pair(p1: float, p2: float) -> None:
    if not (p1 >= 0 and p2 >= 0):
        raise ValueError(f"probabilities must be nonnegative, got {p1!r}, {p2!r}")


def trig_law(p1: float, p2: float, theta: float) -> float:
    """Trigonometric interference of two probabilities at phase theta."""
    _check_probability_pair(p1, p2)
    return p1 + p2 + 2.0 * math.sqrt(p1 * p2) * math.cos(theta)


def hyp_law(p1: float, p2: float, theta: float, sign: int) -> float:
    """Hyperbolic interference; with sign +1 never below (sqrt(P1)+sqrt(P2))**2.

    The output may leave [0, 1] even for probability inputs; that is the
    signature feature of the hyperbolic regime, not an error.
    """
    _check_probability_pair(p1, p2)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if abs(theta) > THETA_MAX:
        raise PhaseRangeError(f"|theta| = {abs(theta)} exceeds {THETA_MAX}")
    return p1 + p2 + sign * 2.0 * math.sqrt(p1 * p2) * math.cosh(theta)


def trig_linearization_residual(a: float, b: float, theta: float) -> float:
    """Gap between the trigonometric law and |sqrt(A) + sqrt(B) e^{i theta}|^2.

    The right side is evaluated by explicit ordered-pair complex
    arithmetic, so the two sides share no intermediate expressions.
    """
    _check_probability_pair(a, b)
    left = a + b + 2.0 * math.sqrt(a * b) * math.cos(theta)
    re = math.sqrt(a) + math.sqrt(b) * math.cos(theta)
    im = math.sqrt(b) * math.sin(theta)
    return abs(left - (re * re + im * im))


def hyp_linearization_residual(a: float, b: float, theta: float, sign: int) -> float:
    """Gap between the hyperbolic law and |sqrt(A) +- sqrt(B) e^{j theta}|^2.

    The right side goes through split-complex arithmetic end to end.
    """
    left = hyp_law(a, b, theta, sign)
    w = expj(theta) * (sign * math.sqrt(b)) + math.sqrt(a)
    return abs(left - w.norm_sq())


def classify(pprime: float, p1: float, p2: float) -> InterferenceVerdict:
    """Regime, phase, and sign explaining an observed probability triple.

    Both reference probabilities must be strictly positive, otherwise the
    interference coefficient is undefined and
    :class:`DegenerateInputsError` is raised; the same happens when the
    coefficient is too large for any representable phase.  Any real
    ``pprime`` is accepted; physical admissibility is the caller's concern.
    """
    if not (
        math.isfinite(pprime) and math.isfinite(p1) and math.isfinite(p2)
    ):
        raise DegenerateInputsError("inputs must be finite")
    if p1 <= 0 or p2 <= 0:
        raise DegenerateInputsError(
            f"reference probabilities must be positive, got {p1!r}, {p2!r}"
        )
    lam = (pprime - p1 - p2) / (2.0 * math.sqrt(p1 * p2))
    mag = abs(lam)
    if mag > math.cosh(THETA_MAX):
        raise DegenerateInputsError(f"coefficient {lam} exceeds any admissible phase")
    if mag < 1.0 - EPS_CLS:
        return InterferenceVerdict(TRIG, math.acos(lam), 1, lam)
    if mag > 1.0 + EPS_CLS:
        sign = 1 if lam > 0 else -1
        return InterferenceVerdict(HYP, math.acosh(mag), sign, lam)
    sign = 1 if lam >= 0 else -1
    return InterferenceVerdict(BOUNDARY, 0.0, sign, lam)
