"""Arithmetic of split-complex numbers (also called hyperbolic numbers).

The split-complex plane is the two dimensional real algebra spanned by 1 and
a unit ``j`` with ``j*j = +1``.  Sums are componentwise and products mirror
ordinary complex arithmetic except for a sign flip in the real part:

    (x1 + j y1) * (x2 + j y2) = (x1 x2 + y1 y2) + j (x1 y2 + x2 y1)

Conjugation negates the j component, so the squared modulus

    z * z.conj() = x**2 - y**2

is an *indefinite* quadratic form.  It vanishes on the diagonals |x| == |y|
(the light cone, home of all zero divisors of the algebra) and is negative
when the j component dominates.  The squared modulus is multiplicative,
which makes the positive cone {x**2 - y**2 >= 0} closed under products.

Numbers with strictly positive squared modulus factor as

    z = sign(x) * m * expj(theta),    expj(theta) = cosh(theta) + j sinh(theta)

with m = sqrt(x**2 - y**2) > 0 and a unique real phase theta: the hyperbolic
analogue of the complex polar form.  ``expj`` turns addition of phases into
multiplication, exactly like Euler's formula does on the unit circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateNormError, PhaseRangeError

__all__ = [
    "EPS_ALG",
    "EPS_MEM",
    "THETA_MAX",
    "SplitComplex",
    "PolarForm",
    "J",
    "ONE",
    "ZERO",
    "expj",
]

#: Tolerance for algebraic identities expected to hold up to rounding.
EPS_ALG = 1e-9

#: Default tolerance for positive-cone membership tests.
EPS_MEM = 1e-12

#: Largest |theta| accepted by ``expj`` and the hyperbolic laws.  cosh
#: overflows a double near 710; stopping well short leaves room for products.
THETA_MAX = 300.0


@dataclass(frozen=True)
class SplitComplex:
    """Immutable split-complex number ``x + j*y`` with finite components."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"components must be finite, got ({self.x}, {self.y})")

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: SplitComplex | float | int) -> SplitComplex:
        other = _coerce(other)
        return SplitComplex(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other: SplitComplex | float | int) -> SplitComplex:
        other = _coerce(other)
        return SplitComplex(self.x - other.x, self.y - other.y)

    def __rsub__(self, other: SplitComplex | float | int) -> SplitComplex:
        return _coerce(other) - self

    def __mul__(self, other: SplitComplex | float | int) -> SplitComplex:
        if isinstance(other, (int, float)):
            return SplitComplex(self.x * other, self.y * other)
        return SplitComplex(
            self.x * other.x + self.y * other.y,
            self.x * other.y + other.x * self.y,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: SplitComplex | float | int) -> SplitComplex:
        if isinstance(other, (int, float)):
            return SplitComplex(self.x / other, self.y / other)
        return self * other.inverse()

    def __neg__(self) -> SplitComplex:
        return SplitComplex(-self.x, -self.y)

    def __pos__(self) -> SplitComplex:
        return self

    def __str__(self) -> str:
        return f"{self.x:g}{self.y:+g}j"

    # -- involution and modulus --------------------------------------------

    def conj(self) -> SplitComplex:
        """Conjugate ``x - j*y``; an involutive ring homomorphism."""
        return SplitComplex(self.x, -self.y)

    def norm_sq(self) -> float:
        """Squared modulus ``x**2 - y**2``.  May be negative or zero.

        Evaluated as ``(x - y) * (x + y)``: near the light cone the
        subtraction of the raw components is exact, so the factored form
        keeps full relative precision where ``x*x - y*y`` loses it to
        cancellation.
        """
        return (self.x - self.y) * (self.x + self.y)

    def in_positive_cone(self, tol: float = EPS_MEM) -> bool:
        """True when the squared modulus is >= -tol.

        Membership is non-strict: the light cone belongs to the positive
        cone even though its elements admit no polar form.
        """
        if tol < 0:
            raise ValueError("tolerance must be nonnegative")
        return self.norm_sq() >= -tol

    def mag(self) -> float:
        """Largest absolute component; a cheap magnitude for tolerance scaling."""
        return max(abs(self.x), abs(self.y))

    def dist(self, other: SplitComplex) -> float:
        """Chebyshev distance between component pairs."""
        return max(abs(self.x - other.x), abs(self.y - other.y))

    # -- polar structure ----------------------------------------------------

    def polar(self) -> PolarForm:
        """Factor ``self = sign * modulus * expj(theta)``.

        Requires a strictly positive squared modulus; elements on or inside
        the light cone raise :class:`DegenerateNormError`.  The phase is
        recovered through ``asinh`` of the normalized j component, which is
        single valued and keeps the sign of theta.
        """
        ns = self.norm_sq()
        if ns <= 0.0:
            raise DegenerateNormError(
                f"polar form needs positive squared modulus, got {ns} for {self}"
            )
        sign = 1 if self.x > 0.0 else -1
        modulus = math.sqrt(ns)
        theta = math.asinh(sign * self.y / modulus)
        return PolarForm(sign, modulus, theta)

    def inverse(self) -> SplitComplex:
        """Multiplicative inverse ``conj(z) / norm_sq(z)``.

        Defined exactly for positive squared modulus; zero divisors (the
        light cone) and j-dominant elements with negative squared modulus
        are rejected for the group-theoretic inverse requested here.
        """
        ns = self.norm_sq()
        if ns <= 0.0:
            raise DegenerateNormError(
                f"no inverse on or inside the light cone (norm_sq={ns})"
            )
        return SplitComplex(self.x / ns, -self.y / ns)

    # -- serialization -------------------------------------------------------

    def to_list(self) -> list[float]:
        """JSON form ``[x, y]``."""
        return [self.x, self.y]

    @classmethod
    def from_list(cls, data: object) -> SplitComplex:
        if (
            not isinstance(data, (list, tuple))
            or len(data) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in data)
        ):
            raise ValueError(f"expected [x, y] with numeric entries, got {data!r}")
        return cls(float(data[0]), float(data[1]))

    @classmethod
    def zero(cls) -> SplitComplex:
        return ZERO

    @classmethod
    def one(cls) -> SplitComplex:
        return ONE


@dataclass(frozen=True)
class PolarForm:
    """Polar data ``(sign, modulus, theta)`` of a split-complex number."""

    sign: int
    modulus: float
    theta: float

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if not self.modulus > 0.0:
            raise ValueError(f"modulus must be strictly positive, got {self.modulus}")

    def to_number(self) -> SplitComplex:
        """Reconstruct the source number ``sign * modulus * expj(theta)``."""
        return expj(self.theta) * (self.sign * self.modulus)


def expj(theta: float) -> SplitComplex:
    """Unit-circle element ``cosh(theta) + j*sinh(theta)``.

    Satisfies ``expj(a) * expj(b) == expj(a + b)`` and has squared modulus 1
    for every phase.  Phases beyond ``THETA_MAX`` are rejected instead of
    silently overflowing to infinity.
    """
    if not math.isfinite(theta):
        raise ValueError(f"phase must be finite, got {theta}")
    if abs(theta) > THETA_MAX:
        raise PhaseRangeError(f"|theta| = {abs(theta)} exceeds THETA_MAX = {THETA_MAX}")
    return SplitComplex(math.cosh(theta), math.sinh(theta))


def _coerce(value: SplitComplex | float | int) -> SplitComplex:
    if isinstance(value, SplitComplex):
        return value
    return SplitComplex(float(value), 0.0)


#: The hyperbolic unit, with J * J == ONE.
J = SplitComplex(0.0, 1.0)
ONE = SplitComplex(1.0, 0.0)
ZERO = SplitComplex(0.0, 0.0)
