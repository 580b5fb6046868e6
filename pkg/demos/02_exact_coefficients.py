"""The exact coefficient families alpha_k, beta_jk and the Bessel polynomials.

Every coefficient is a rational multiple of a power of pi and is kept that
way; floating point enters only on explicit request.
"""

from guinand import alpha, bessel_poly, beta_bessel_crosscheck, betas

for k in (3, 5, 7, 9, 11):
    print(f"k = {k}:")
    print(f"  alpha_{k} = {alpha(k)}   (float {alpha(k).to_float():+.12e})")
    for j, b in enumerate(betas(k)):
        print(f"  beta_{j},{k} = {b}")
    print()

print("k = 3 reproduces the classical transform pair: alpha_3 = 1 and")
print("beta_0,3 = 1 make the transformed series i psi'(0) + i sum r_3(n)/sqrt(n) psi(sqrt n).")
print()

print("Bessel polynomials theta_n (ascending coefficients):")
for n in range(6):
    print(f"  theta_{n}: {bessel_poly(n).coeffs}")
print()
print("Coefficient identity theta_n(z) = (2 pi)^n sum_j beta_j,k (-z)^j, k = 2n+3,")
print("checked exactly for n = 0..8:",
      all(beta_bessel_crosscheck(n) for n in range(9)))
