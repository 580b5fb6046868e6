"""Radial Fourier transforms in odd dimensions, four ways.

The k-dimensional transform of a radial function f(|x|) reduces to
one-dimensional derivatives of the transform of f; the sphere
surface-measure profile s_k has a trigonometric closed form, a Bessel
form, a dimension recurrence, and a Bessel-polynomial form, all of which
cross-validate.  An adaptive Gauss-Kronrod quadrature of the spherical
integral serves as the independent oracle.
"""

import math

from guinand import (
    bk_recurrence_check, parse, radial_ft_closed, radial_ft_quadrature,
    radial_ft_zero, sphere_area, sphere_ft_bessel, sphere_ft_besselpoly,
    sphere_ft_closed, sphere_ft_recurrence,
)

print("Sphere surface areas (exact):")
for k in (3, 5, 7, 9, 11):
    print(f"  k={k:2d}: {str(sphere_area(k)):>16}  = {sphere_area(k).to_float():.10f}")

print()
print("The profile s_k(t) by four routes (k = 9, t = 2):")
print("  closed     :", sphere_ft_closed(9, 2.0))
print("  bessel     :", sphere_ft_bessel(9, 2.0))
print("  recurrence :", sphere_ft_recurrence(9, 2.0))
print("  besselpoly :", sphere_ft_besselpoly(9, 2.0))

print()
print("s_5(1) = sin(2 pi)/pi - 2 cos(2 pi) = -2:")
print("  closed:", sphere_ft_closed(5, 1.0), " recurrence:", sphere_ft_recurrence(5, 1.0))

print()
print("Caveat: for k = 9, 11 at t <= 0.2 the upward recurrences and the")
print("cancelling closed form lose digits (documented in guinand.radial);")
print("relative spreads there reach ~1e-9 at k = 11, t = 0.1.")

print()
gauss = parse("exp(-pi*t^2)").value
print("The Gaussian is a fixed point of the radial transform in every dimension:")
for k in (3, 7, 11):
    t = 1.3
    print(f"  k={k:2d}: Fhat_k({t}) = {radial_ft_closed(gauss, k, t).real:.15f}"
          f"   e^(-pi t^2) = {math.exp(-math.pi * t * t):.15f}")

print()
f = parse("t^2*exp(-pi*t^2)").value
print("f = t^2 e^{-pi t^2}, k = 3:")
print("  closed form at t=1   :", radial_ft_closed(f, 3, 1.0).real)
print("  quadrature oracle    :", radial_ft_quadrature(f, 3, 1.0, 1e-10).real)
print("  value at the origin  :", radial_ft_zero(f, 3).real,
      " (= 3/(2 pi) =", 3 / (2 * math.pi), ")")

print()
print("Operator recurrence consistency |B_k f - combination of B_{k-2}, B_{k-4}|:")
for k, t in ((5, 1.0), (7, 1.1), (9, 0.6)):
    print(f"  k={k}, t={t}: {bk_recurrence_check(gauss, k, t):.2e}")
