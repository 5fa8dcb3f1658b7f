"""Numerics for quantum-style probability over the split-complex numbers.

The split-complex (hyperbolic) numbers replace the imaginary unit with a
unit j satisfying j**2 = +1.  Their squared norm x**2 - y**2 is indefinite,
which changes the character of every construction stacked on top of it:
the unit circle becomes a hyperbola, only the positive cone carries polar
forms, and a two-component state vector assigns Born-style probabilities
only when all of its coefficients stay inside that cone.

The package provides

- :mod:`hyperq.algebra`: split-complex arithmetic, polar decomposition,
  positive-cone membership (:class:`~hyperq.algebra.SplitComplex`);
- :mod:`hyperq.space`: the 2D module with its indefinite inner product,
  row-orthonormal (unitary) matrices, and basis changes;
- :mod:`hyperq.born`: decomposability, the generalized Born rule, and the
  closed-form probability transformation with its sign and phase
  constraints;
- :mod:`hyperq.interference`: trigonometric and hyperbolic interference
  laws with a regime classifier for probability data;
- :mod:`hyperq.witness`: generators of decomposable unitaries and a seeded
  search for non-transitivity witnesses;
- :mod:`hyperq.cli`: a batch command-line interface over all of the above.

Everything is an immutable value operated on by pure functions, safe to
share freely across threads.
"""

from .algebra import (
    EPS_ALG,
    EPS_MEM,
    J,
    ONE,
    THETA_MAX,
    ZERO,
    PolarForm,
    SplitComplex,
    expj,
)
from .born import (
    Phase,
    ProbabilityModel,
    SignPhaseReport,
    StateDecomposition,
    TransformedProbabilities,
    amplitude,
    check_sign_phase_constraints,
    decompose,
    extract_model,
    pipeline_probabilities,
    transform_probabilities,
)
from .errors import (
    ConstraintViolatedError,
    DegenerateInputsError,
    DegenerateNormError,
    NotNormalizedError,
    NotUnitaryError,
    PhaseRangeError,
    PreconditionError,
)
from .interference import (
    BOUNDARY,
    EPS_CLS,
    HYP,
    TRIG,
    InterferenceVerdict,
    classify,
    hyp_law,
    hyp_linearization_residual,
    trig_law,
    trig_linearization_residual,
)
from .space import (
    Mat2,
    Vec2,
    change_basis,
    doubly_stochastic_residual,
    inner,
    is_orthonormal_rows,
    orthonormality_residual,
    prob_matrix,
)
from .witness import (
    NonTransitivityWitness,
    UnitaryParams,
    make_decomposable_unitary,
    search_non_transitivity,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "EPS_ALG",
    "EPS_CLS",
    "EPS_MEM",
    "THETA_MAX",
    "J",
    "ONE",
    "ZERO",
    "TRIG",
    "HYP",
    "BOUNDARY",
    "SplitComplex",
    "PolarForm",
    "expj",
    "Vec2",
    "Mat2",
    "inner",
    "is_orthonormal_rows",
    "orthonormality_residual",
    "change_basis",
    "prob_matrix",
    "doubly_stochastic_residual",
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
    "InterferenceVerdict",
    "classify",
    "trig_law",
    "hyp_law",
    "trig_linearization_residual",
    "hyp_linearization_residual",
    "UnitaryParams",
    "NonTransitivityWitness",
    "make_decomposable_unitary",
    "search_non_transitivity",
    "verify_witness",
    "PreconditionError",
    "DegenerateNormError",
    "PhaseRangeError",
    "NotUnitaryError",
    "NotNormalizedError",
    "DegenerateInputsError",
    "ConstraintViolatedError",
]
