"""Exception types shared across the package.

Every exception below signals a violated operation precondition, so callers
(notably the command line front end) can treat the whole family uniformly.
"""

__all__ = [
    "PreconditionError",
    "DegenerateNormError",
    "PhaseRangeError",
    "NotUnitaryError",
    "NotNormalizedError",
    "DegenerateInputsError",
    "ConstraintViolatedError",
]


class PreconditionError(ValueError):
    """An input violates a documented precondition of the operation."""


class DegenerateNormError(PreconditionError):
    """The squared modulus is zero or negative where a positive one is required.

    Raised by polar decomposition and inversion: elements on or inside the
    light cone have no polar form and (on the cone) no multiplicative inverse.
    """


class PhaseRangeError(PreconditionError):
    """A hyperbolic phase exceeds the representable range (|theta| > THETA_MAX)."""


class NotUnitaryError(PreconditionError):
    """A matrix fails row orthonormality under the indefinite inner product."""


class NotNormalizedError(PreconditionError):
    """A state's squared-modulus sum differs from 1 beyond tolerance."""


class DegenerateInputsError(PreconditionError):
    """Probability inputs on which the interference classifier is undefined."""


class ConstraintViolatedError(PreconditionError):
    """A probability model violates the symmetry required for a unit total."""
