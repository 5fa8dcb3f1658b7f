"""Constructive search for failures of decomposability transitivity.

Decomposability is basis-relative and, perhaps surprisingly, not
transitive: a state with positive-cone coefficients in basis b, changed
into a basis a through a matrix whose rows are themselves decomposable
states, can end up with a coefficient of negative squared norm.  Nothing in
the chain looks pathological until the final coordinates appear.

The generator here produces the full family of row-orthonormal matrices
with positive-cone entries,

    [  sqrt(p)   * e^{j g1},        sqrt(1-p) * e^{j g2}      ]
    [  sqrt(1-p) * e^{j (g1-d)},   -sqrt(p)   * e^{j (g2-d)}  ],

parametrized by a probability split p and three free phases.  Row norms are
1 by construction and the orthogonality cross terms cancel because both
columns carry the same phase offset d.  Negating a whole row would give a
second sign pattern but changes no squared norm, so only this one is
generated.

The search draws random states and matrices from this family and returns
the first combination whose transformed coordinates leave the positive
cone, packaged with everything needed to re-verify the violation from
scratch.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .algebra import EPS_MEM
from .born import amplitude, decompose
from .errors import PreconditionError
from .space import Mat2, Vec2, change_basis

__all__ = [
    "UnitaryParams",
    "NonTransitivityWitness",
    "make_decomposable_unitary",
    "search_non_transitivity",
    "verify_witness",
]

PHASE_RANGE = 3.0


@dataclass(frozen=True)
class UnitaryParams:
    """Parameters of one decomposable row-orthonormal matrix."""

    p: float
    gamma1: float
    gamma2: float
    delta: float

    def __post_init__(self) -> None:
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"p must lie strictly inside (0, 1), got {self.p!r}")
        for name in ("gamma1", "gamma2", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


def make_decomposable_unitary(params: UnitaryParams) -> Mat2:
    """Row-orthonormal matrix with every entry in the positive cone.

    Its entrywise squared norms form the doubly stochastic matrix
    [[p, 1-p], [1-p, p]].
    """
    p, g1, g2, d = params.p, params.gamma1, params.gamma2, params.delta
    return Mat2(
        amplitude(1, p, g1),
        amplitude(1, 1.0 - p, g2),
        amplitude(1, 1.0 - p, g1 - d),
        amplitude(-1, p, g2 - d),
    )


@dataclass(frozen=True)
class NonTransitivityWitness:
    """A decomposable state pushed out of the positive cone by a basis change.

    ``beta`` is decomposable, every row of ``basis`` is decomposable, yet
    coordinate ``violating_index`` of ``alpha = change_basis(beta, basis)``
    has squared norm ``norm_sq`` below zero.
    """

    beta: Vec2
    basis: Mat2
    alpha: Vec2
    violating_index: int
    norm_sq: float

    def to_json_dict(self) -> dict[str, object]:
        return {
            "beta": self.beta.to_list(),
            "B": self.basis.to_list(),
            "alpha": self.alpha.to_list(),
            "violating_index": self.violating_index,
            "norm_sq": self.norm_sq,
        }


def search_non_transitivity(
    seed: int, max_iter: int
) -> NonTransitivityWitness | None:
    """Randomized hunt for a transitivity failure, deterministic per seed.

    Each iteration draws, in this fixed order from a Mersenne Twister
    seeded with ``seed``: the state weight q1 from (0, 1), state phases
    xi1, xi2 from [-3, 3], the matrix weight p from (0, 1), and matrix
    phases gamma1, gamma2, delta from [-3, 3].  The first sample whose
    transformed coordinates acquire a squared norm below ``-EPS_MEM`` is
    returned; None if ``max_iter`` samples all stay decomposable.
    """
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter!r}")
    rng = random.Random(seed)
    for _ in range(max_iter):
        q1 = rng.uniform(0.0, 1.0)
        xi1 = rng.uniform(-PHASE_RANGE, PHASE_RANGE)
        xi2 = rng.uniform(-PHASE_RANGE, PHASE_RANGE)
        p = rng.uniform(0.0, 1.0)
        gamma1 = rng.uniform(-PHASE_RANGE, PHASE_RANGE)
        gamma2 = rng.uniform(-PHASE_RANGE, PHASE_RANGE)
        delta = rng.uniform(-PHASE_RANGE, PHASE_RANGE)
        # uniform() is closed at the endpoints; open-interval draws only
        if not (0.0 < q1 < 1.0 and 0.0 < p < 1.0):
            continue
        beta = Vec2(amplitude(1, q1, xi1), amplitude(1, 1.0 - q1, xi2))
        basis = make_decomposable_unitary(UnitaryParams(p, gamma1, gamma2, delta))
        alpha = change_basis(beta, basis)
        for index, coord in enumerate(alpha.coords(), start=1):
            ns = coord.norm_sq()
            if ns < -EPS_MEM:
                return NonTransitivityWitness(beta, basis, alpha, index, ns)
    return None


def verify_witness(w: NonTransitivityWitness) -> bool:
    """Re-check a claimed witness from its raw fields; False on any failure.

    Confirms that the state and both matrix rows are decomposable, that the
    stored coordinates really are the basis change of the state, and that
    the flagged coordinate has squared norm below ``-EPS_MEM`` matching the
    stored value.
    """
    try:
        if w.violating_index not in (1, 2):
            return False
        if not decompose(w.beta).decomposable:
            return False
        if not all(decompose(row).decomposable for row in w.basis.rows()):
            return False
        alpha = change_basis(w.beta, w.basis)
        if alpha.dist(w.alpha) > 1e-9:
            return False
        ns = alpha.coords()[w.violating_index - 1].norm_sq()
        return ns < -EPS_MEM and abs(ns - w.norm_sq) <= 1e-9
    except (PreconditionError, ValueError):
        return False
