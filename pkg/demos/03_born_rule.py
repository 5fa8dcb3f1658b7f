"""
The generalized Born rule and its closed form
=============================================

Born probabilities are the entrywise norm_sq of a state's coefficients,
which only makes sense when every coefficient sits in the positive cone.
For decomposable inputs the transformed probabilities also come out of a
closed-form expression; this script runs both routes side by side.
"""

import math

from hyperq import Vec2, change_basis
from hyperq.born import (
    ProbabilityModel,
    amplitude,
    check_sign_phase_constraints,
    decompose,
    extract_model,
    pipeline_probabilities,
    transform_probabilities,
)
from hyperq.witness import UnitaryParams, make_decomposable_unitary

# a normalized, decomposable state: both amplitudes in the positive cone
beta = Vec2(amplitude(1, 0.64, 0.9), amplitude(-1, 0.36, -0.4))
d = decompose(beta)
print("decomposable:", d.decomposable)
print("probabilities:", d.probabilities)
print("phases (sign, xi):", d.phases)

# build the pair and its probability model from the same scalar draws
q1, xi1, xi2 = 0.64, 0.9, -0.4
p, gamma1, gamma2, delta = 0.3, 0.5, -0.7, 1.2
basis = make_decomposable_unitary(UnitaryParams(p, gamma1, gamma2, delta))
model = ProbabilityModel(
    q1, 1 - q1, p, 1 - p, 1 - p, p,
    theta=(xi1 - xi2) + delta,
    eps1=-1,  # product of the two amplitude signs above
)

closed = transform_probabilities(model)
alpha = change_basis(beta, basis)
print("\nclosed form   p1, p2 =", closed.p1, closed.p2)
print("linear algebra p1, p2 =", alpha.c1.norm_sq(), alpha.c2.norm_sq())
print("p1 + p2 =", closed.p1 + closed.p2)
print("in [0, 1]:", closed.in_range)

# the model can also be fitted back from the raw split-complex data
fitted = extract_model(beta, basis)
print("\nfitted theta:", fitted.theta, " drawn theta:", model.theta)
print("fitted eps1:", fitted.eps1)

# the sign/phase constraint report behind the closed form
report = check_sign_phase_constraints(basis, beta)
print("\ntheta1 - theta2 =", report.theta_diff)
print("opposite signs:", report.opposite_signs)
print("normalization residual:", report.residual)
print("satisfied:", report.satisfied)

# crank the phase and the transformed values leave [0, 1]: still exact
# numbers, just not interpretable as probabilities
hot = ProbabilityModel(0.5, 0.5, 0.5, 0.5, 0.5, 0.5, theta=3.0, eps1=1)
out = transform_probabilities(hot)
print("\ntheta = 3 gives p1 =", out.p1, " p2 =", out.p2)
print("in [0, 1]:", out.in_range, " but p1 + p2 =", out.p1 + out.p2)

# the same state fails to decompose in a basis that drives a coefficient
# out of the cone; the pipeline reports that instead of raising
sharp = Vec2(amplitude(1, 0.5, math.log(2.0)), amplitude(1, 0.5, 0.0))
plain = make_decomposable_unitary(UnitaryParams(0.5, 0.0, 0.0, 0.0))
verdict = pipeline_probabilities(sharp, plain)
print("\nrotated witness state decomposable:", verdict.decomposable)
print("probabilities:", verdict.probabilities)
