"""The closed test-function algebra p(t) exp(-pi a t^2).

Polynomial-times-Gaussian functions stay in the family under derivatives,
parity splitting, division by t, and the Fourier transform, so identities
can be checked without any numerical transform.
"""

from guinand import gauss_term, parse
from guinand.schwartz import PiScalar

phi = parse("t*exp(-pi*t^2)").value
print("phi =", phi.to_expr())
print("phi(1) =", phi.eval(1.0).real, " (= e^{-pi})")

print()
print("Exact symbolic derivative:")
print("  phi' =", phi.derivative().to_expr())
print("  phi'(0) =", phi.derivative().eval(0.0).real)

print()
print("Fourier transform (convention: integral of f(x) e^{-2 pi i x xi} dx):")
print("  FT[phi] =", phi.fourier().to_expr())
print("  phi is the first Hermite eigenfunction: eigenvalue -i.")

exact = gauss_term(1, [0, 1], exact=True).fourier()
print("  in exact mode the coefficient is literally -i:",
      exact.terms[0][1][1] == -PiScalar.I)

print()
f = parse("t*exp(-pi*t^2/2)").value
print("Other scales transform with the a^(-1/2) rule:")
print("  FT[t e^{-pi t^2/2}] =", f.fourier().to_expr())

print()
print("The double transform is reflection:")
g = parse("(1+t+t^3)*exp(-pi*t^2/4)").value
gg = g.fourier().fourier()
t = 1.7
print(f"  FT[FT[g]]({t}) = {gg.eval(t):.15g}")
print(f"  g({-t})        = {g.eval(-t):.15g}")

print()
print("Hadamard division peels one factor of t off a function vanishing at 0:")
h = parse("(t^3-2*t)*exp(-pi*t^2)").value
print("  f =", h.to_expr())
print("  f/t =", h.hadamard_divide().to_expr())

print()
print("Odd part f(t) - f(-t) feeds the odd-only summation formulas:")
m = parse("(1+t)*exp(-pi*t^2)").value
print("  odd part of (1+t) e^{-pi t^2} =", m.odd_part().to_expr())

print()
print("Parse errors carry byte offsets:")
try:
    parse("t*exp(pi*t^2)")
except Exception as exc:
    print("  ", exc)
