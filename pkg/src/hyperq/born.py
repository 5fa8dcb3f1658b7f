"""Generalized Born rule over the split-complex scalars.

A normalized state vector assigns probability ``norm_sq(coefficient)`` to
each outcome, exactly as the classical Born rule does with the complex
modulus, but the indefinite squared norm makes this meaningful only when
every coefficient lies in the positive cone.  Such states are called
*decomposable* in the chosen basis.

Writing each coefficient as ``s * sqrt(q) * expj(xi)`` and each basis-matrix
entry as ``s_ik * sqrt(p_ik) * expj(g_ik)`` turns the basis change into a
closed-form transformation of the probabilities themselves:

    p1 = q1*p11 + q2*p21 + eps1 * 2*sqrt(q1*p11*q2*p21) * cosh(theta)
    p2 = q1*p12 + q2*p22 - eps1 * 2*sqrt(q1*p12*q2*p22) * cosh(theta)

with a single phase ``theta`` shared by both columns and opposite signs on
the two interference terms.  Both facts are forced by requiring p1 + p2 = 1
for every input state; :func:`check_sign_phase_constraints` measures how
well a concrete matrix and state satisfy them, and
:func:`transform_probabilities` evaluates the closed form.  The transformed
values can leave [0, 1]: that is the formalism's signal that the state
stopped being decomposable, so they are flagged rather than clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .algebra import EPS_ALG, EPS_MEM, THETA_MAX, PolarForm, SplitComplex, expj
from .errors import (
    ConstraintViolatedError,
    DegenerateNormError,
    NotNormalizedError,
    PhaseRangeError,
    PreconditionError,
)
from .space import Mat2, Vec2, change_basis

__all__ = [
    "Phase",
    "StateDecomposition",
    "ProbabilityModel",
    "TransformedProbabilities",
    "SignPhaseReport",
    "decompose",
    "amplitude",
    "transform_probabilities",
    "check_sign_phase_constraints",
    "extract_model",
    "pipeline_probabilities",
]


class Phase(NamedTuple):
    """Sign and hyperbolic phase of one nonzero state coefficient."""

    sign: int
    xi: float


@dataclass(frozen=True)
class StateDecomposition:
    """Coefficients of a state in a basis plus the Born-rule verdict.

    ``probabilities`` and ``phases`` are None when the state is not
    decomposable; a phase entry is None for a coefficient of negligible
    squared norm, where the polar form carries no information.
    """

    coefficients: Vec2
    decomposable: bool
    probabilities: tuple[float, float] | None
    phases: tuple[Phase | None, Phase | None] | None

    def to_json_dict(self) -> dict[str, object]:
        probs = None if self.probabilities is None else list(self.probabilities)
        return {
            "coefficients": self.coefficients.to_list(),
            "decomposable": self.decomposable,
            "probabilities": probs,
        }


def _phase_of(c: SplitComplex) -> Phase | None:
    if c.norm_sq() <= EPS_MEM:
        return None
    p = c.polar()
    return Phase(p.sign, p.theta)


def decompose(phi: Vec2, tol: float = EPS_ALG) -> StateDecomposition:
    """Born-rule reading of a normalized state in the implicit basis.

    The squared norms of the coefficients must sum to 1 within ``tol``
    (raises :class:`NotNormalizedError` otherwise).  The state is
    decomposable iff both coefficients lie in the positive cone at ``tol``;
    only then are the squared norms meaningful as probabilities.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    q1, q2 = phi.norms_sq()
    if abs(q1 + q2 - 1.0) > tol:
        raise NotNormalizedError(f"squared norms sum to {q1 + q2}, expected 1")
    if not (phi.c1.in_positive_cone(tol) and phi.c2.in_positive_cone(tol)):
        return StateDecomposition(phi, False, None, None)
    return StateDecomposition(
        phi, True, (q1, q2), (_phase_of(phi.c1), _phase_of(phi.c2))
    )


def amplitude(sign: int, q: float, xi: float) -> SplitComplex:
    """Coefficient ``sign * sqrt(q) * expj(xi)`` with squared norm ``q``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if not q >= 0:
        raise ValueError(f"probability must be nonnegative, got {q!r}")
    return expj(xi) * (sign * math.sqrt(q))


@dataclass(frozen=True)
class ProbabilityModel:
    """Probability-level data of a basis change: weights, matrix, phase, sign.

    ``q1, q2`` are the state's outcome probabilities in the old basis,
    ``p11..p22`` the squared norms of the basis-matrix entries, ``theta``
    the common interference phase, and ``eps1`` the sign on the first
    interference term.  The second sign is always ``-eps1``; independent
    signs cannot preserve total probability.
    """

    q1: float
    q2: float
    p11: float
    p12: float
    p21: float
    p22: float
    theta: float
    eps1: int

    def __post_init__(self) -> None:
        for name in ("q1", "q2", "p11", "p12", "p21", "p22", "theta"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.eps1 not in (1, -1):
            raise ValueError(f"eps1 must be +1 or -1, got {self.eps1!r}")

    @property
    def eps2(self) -> int:
        return -self.eps1

    def validate(self, tol: float = EPS_ALG) -> None:
        """Raise :class:`PreconditionError` unless all invariants hold at tol."""
        if tol < 0:
            raise ValueError("tolerance must be nonnegative")
        if abs(self.q1 + self.q2 - 1.0) > tol:
            raise PreconditionError(f"q1 + q2 = {self.q1 + self.q2}, expected 1")
        entries = (self.q1, self.q2, self.p11, self.p12, self.p21, self.p22)
        if min(entries) < -tol or max(entries) > 1.0 + tol:
            raise PreconditionError("probabilities must lie in [0, 1]")
        for label, total in (
            ("row 1", self.p11 + self.p12),
            ("row 2", self.p21 + self.p22),
            ("column 1", self.p11 + self.p21),
            ("column 2", self.p12 + self.p22),
        ):
            if abs(total - 1.0) > tol:
                raise PreconditionError(f"{label} sums to {total}, expected 1")
        if abs(self.theta) > THETA_MAX:
            raise PhaseRangeError(f"|theta| = {abs(self.theta)} exceeds {THETA_MAX}")

    def to_json_dict(self) -> dict[str, object]:
        return {
            "q": [self.q1, self.q2],
            "P": [[self.p11, self.p12], [self.p21, self.p22]],
            "theta": self.theta,
            "eps1": self.eps1,
        }

    @classmethod
    def from_json_dict(cls, data: object) -> ProbabilityModel:
        if not isinstance(data, dict):
            raise ValueError(f"expected an object, got {data!r}")
        try:
            (q1, q2) = data["q"]
            ((p11, p12), (p21, p22)) = data["P"]
            theta = data["theta"]
            eps1 = data["eps1"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed probability model: {exc}") from exc
        return cls(q1, q2, p11, p12, p21, p22, theta, eps1)


class TransformedProbabilities(NamedTuple):
    """Output pair of the closed-form transformation; may leave [0, 1]."""

    p1: float
    p2: float

    @property
    def in_range(self) -> bool:
        return all(-EPS_ALG <= p <= 1.0 + EPS_ALG for p in self)


def transform_probabilities(
    m: ProbabilityModel, tol: float = EPS_ALG
) -> TransformedProbabilities:
    """Closed-form new-basis probabilities of a probability model.

    Requires both matrix rows to sum to 1 and the cross-column symmetry
    ``p11*p21 == p12*p22``; without the symmetry the two interference terms
    cannot cancel and p1 + p2 would drift from 1, so its violation raises
    :class:`ConstraintViolatedError`.  Out-of-range outputs are legitimate
    (the state is then not decomposable) and reported via ``in_range``.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if abs(m.q1 + m.q2 - 1.0) > tol:
        raise PreconditionError(f"q1 + q2 = {m.q1 + m.q2}, expected 1")
    entries = (m.q1, m.q2, m.p11, m.p12, m.p21, m.p22)
    if min(entries) < -tol or max(entries) > 1.0 + tol:
        raise PreconditionError("probabilities must lie in [0, 1]")
    for label, total in (("row 1", m.p11 + m.p12), ("row 2", m.p21 + m.p22)):
        if abs(total - 1.0) > tol:
            raise PreconditionError(f"{label} sums to {total}, expected 1")
    if abs(m.theta) > THETA_MAX:
        raise PhaseRangeError(f"|theta| = {abs(m.theta)} exceeds {THETA_MAX}")
    gap = m.p11 * m.p21 - m.p12 * m.p22
    if abs(gap) > tol:
        raise ConstraintViolatedError(
            f"p11*p21 - p12*p22 = {gap}; the interference terms cannot cancel"
        )
    ch = math.cosh(m.theta)
    # products can dip a hair below 0 inside the tolerance slack
    cross1 = 2.0 * math.sqrt(max(m.q1 * m.p11 * m.q2 * m.p21, 0.0)) * ch
    cross2 = 2.0 * math.sqrt(max(m.q1 * m.p12 * m.q2 * m.p22, 0.0)) * ch
    return TransformedProbabilities(
        m.q1 * m.p11 + m.q2 * m.p21 + m.eps1 * cross1,
        m.q1 * m.p12 + m.q2 * m.p22 - m.eps1 * cross2,
    )


@dataclass(frozen=True)
class SignPhaseReport:
    """Diagnostics of the common-phase and opposite-sign requirements.

    ``theta1`` and ``theta2`` are the per-column interference phases; for a
    legitimate basis change their difference vanishes and the term signs
    ``eps1, eps2`` are opposite.  ``residual`` is the signed sum of the
    normalized interference terms, the amount by which total probability
    conservation fails.  Fields are None when the corresponding column
    carries no interference term; if no term survives at all the report is
    ``vacuous`` and the constraints hold trivially.
    """

    eta: float | None
    gamma1: float | None
    gamma2: float | None
    theta1: float | None
    theta2: float | None
    theta_diff: float | None
    eps1: int | None
    eps2: int | None
    opposite_signs: bool | None
    residual: float
    vacuous: bool
    satisfied: bool


def _polar_or_absent(z: SplitComplex) -> PolarForm | None:
    """Polar form, or None for elements of negligible squared norm.

    Entries with norm_sq ~ 0 contribute zero probability weight, so their
    undefined phase is never needed.  A clearly negative squared norm means
    the amplitude cannot carry a probability at all.
    """
    q = z.norm_sq()
    if abs(q) <= EPS_MEM:
        return None
    if q < 0:
        raise DegenerateNormError(
            f"amplitude ({z.x}, {z.y}) has negative squared norm {q}"
        )
    return z.polar()


_VACUOUS = SignPhaseReport(
    eta=None,
    gamma1=None,
    gamma2=None,
    theta1=None,
    theta2=None,
    theta_diff=None,
    eps1=None,
    eps2=None,
    opposite_signs=None,
    residual=0.0,
    vacuous=True,
    satisfied=True,
)


def check_sign_phase_constraints(
    basis: Mat2, beta: Vec2, tol: float = EPS_ALG
) -> SignPhaseReport:
    """Measure the common-phase and opposite-sign constraints on (basis, beta).

    Purely diagnostic: the matrix is not required to be unitary, so the
    report can quantify how a perturbed matrix breaks the constraints.
    Amplitudes of negligible squared norm drop their interference term;
    amplitudes with negative squared norm have no polar form and raise
    :class:`DegenerateNormError`.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    s1 = _polar_or_absent(beta.c1)
    s2 = _polar_or_absent(beta.c2)
    if s1 is None or s2 is None:
        return _VACUOUS

    eta = s1.theta - s2.theta
    state_sign = s1.sign * s2.sign

    def column_term(top: SplitComplex, bottom: SplitComplex):
        pt = _polar_or_absent(top)
        pb = _polar_or_absent(bottom)
        if pt is None or pb is None:
            return None
        gamma = pt.theta - pb.theta
        eps = state_sign * pt.sign * pb.sign
        weight = pt.modulus * pb.modulus
        return gamma, eps, weight

    term1 = column_term(basis.a11, basis.a21)
    term2 = column_term(basis.a12, basis.a22)
    if term1 is None and term2 is None:
        return _VACUOUS

    gamma1 = eps1 = theta1 = None
    gamma2 = eps2 = theta2 = None
    residual = 0.0
    if term1 is not None:
        gamma1, eps1, w1 = term1
        theta1 = eta + gamma1
        residual += eps1 * w1 * math.cosh(theta1)
    if term2 is not None:
        gamma2, eps2, w2 = term2
        theta2 = eta + gamma2
        residual += eps2 * w2 * math.cosh(theta2)

    theta_diff = None
    opposite = None
    if term1 is not None and term2 is not None:
        theta_diff = theta1 - theta2
        opposite = eps2 == -eps1
    satisfied = (
        abs(residual) <= tol
        and (theta_diff is None or abs(theta_diff) <= tol)
        and opposite is not False
    )
    return SignPhaseReport(
        eta=eta,
        gamma1=gamma1,
        gamma2=gamma2,
        theta1=theta1,
        theta2=theta2,
        theta_diff=theta_diff,
        eps1=eps1,
        eps2=eps2,
        opposite_signs=opposite,
        residual=residual,
        vacuous=False,
        satisfied=satisfied,
    )


def extract_model(beta: Vec2, basis: Mat2, tol: float = EPS_ALG) -> ProbabilityModel:
    """Probability model of a concrete (state, basis-matrix) pair.

    Requires both interference terms to be present with a shared phase and
    opposite signs; anything else has no closed-form counterpart and raises
    :class:`PreconditionError`.
    """
    report = check_sign_phase_constraints(basis, beta, tol)
    if report.theta1 is None or report.theta2 is None:
        raise PreconditionError("both interference terms are needed to fit a model")
    if abs(report.theta_diff) > tol:
        raise PreconditionError(
            f"columns disagree on the phase: theta1 - theta2 = {report.theta_diff}"
        )
    if not report.opposite_signs:
        raise PreconditionError("term signs are equal; no valid model exists")
    q1, q2 = beta.norms_sq()
    return ProbabilityModel(
        q1,
        q2,
        basis.a11.norm_sq(),
        basis.a12.norm_sq(),
        basis.a21.norm_sq(),
        basis.a22.norm_sq(),
        theta=report.theta1,
        eps1=report.eps1,
    )


def pipeline_probabilities(
    beta: Vec2, basis: Mat2, tol: float = EPS_ALG
) -> StateDecomposition:
    """Linear-algebra route: change basis, then read probabilities off.

    Agrees with :func:`transform_probabilities` on the model extracted by
    :func:`extract_model` whenever every amplitude admits a polar form.
    """
    return decompose(change_basis(beta, basis, tol), tol)
