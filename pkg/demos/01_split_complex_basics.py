"""
Split-complex arithmetic from the ground up
===========================================

A split-complex number is z = x + j*y with j*j = +1.  The involution
flips the sign of y, and the squared modulus x**2 - y**2 can be negative,
which is where all the interesting behavior in this package comes from.
"""

import math

from hyperq import J, ONE, SplitComplex, expj

# construction and ring arithmetic
a = SplitComplex(2.0, 1.0)
b = SplitComplex(0.5, -1.5)
print("a       =", a)
print("b       =", b)
print("a + b   =", a + b)
print("a * b   =", a * b)
print("j * j   =", J * J)

# the involution is a ring homomorphism: conj(a*b) == conj(a)*conj(b)
print("\nconj(a)          =", a.conj())
print("conj(a*b)        =", (a * b).conj())
print("conj(a)*conj(b)  =", a.conj() * b.conj())

# the squared modulus is indefinite: it can be positive, zero, or negative
for z in (a, SplitComplex(1.0, 1.0), SplitComplex(1.0, 3.0)):
    print(f"\nz = {z}:  norm_sq = {z.norm_sq()}")
    print("  in positive cone:", z.in_positive_cone())

# on the light cone x == y the number has no inverse and no polar form
cone = SplitComplex(2.0, 2.0)
print("\nlight-cone element", cone, "has norm_sq", cone.norm_sq())

# hyperbolic Euler formula: expj(t) = cosh(t) + j*sinh(t), norm_sq == 1
t = 0.8
u = expj(t)
print("\nexpj(0.8)         =", u)
print("norm_sq           =", u.norm_sq())
print("expj(s)*expj(t)   =", expj(0.3) * expj(0.5), " (phases add)")

# polar form: every z with positive norm_sq factors as sign * r * expj(theta)
z = SplitComplex(-2.5, 1.5)
pf = z.polar()
print(f"\nz = {z}")
print(f"polar: sign={pf.sign}, modulus={pf.modulus:.6f}, theta={pf.theta:.6f}")
print("reconstructed:", pf.to_number())

# inverses exist exactly off the light cone: z * z**-1 == 1
w = a.inverse()
print("\na * a^-1 =", a * w)
print("distance from 1:", (a * w).dist(ONE))

# the unit hyperbola norm_sq == 1 is closed under product and inverse
g = expj(1.2) * -ONE
print("\n(-expj(1.2)) norm_sq:", g.norm_sq(), " inverse norm_sq:", g.inverse().norm_sq())
print("asinh-based phase recovery keeps the sign:", g.polar().theta)
