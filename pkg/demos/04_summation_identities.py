"""The summation identities with nodes +-sqrt(n) and weights r_k(n).

For odd phi with transform psi, and each odd k >= 3:

    phi'(0) + sum r_k(n)/sqrt(n) phi(sqrt n)
      = i alpha_k psi^(k-2)(0)
        + i sum r_k(n)/n^((k-2)/2) sum_j beta_jk n^(j/2) psi^(j)(sqrt n)

k = 3 is the self-dual case (the node distribution sigma_3 satisfies
sigma_3_hat = -i sigma_3); for k >= 5 derivatives of psi appear at the
nodes and self-duality is lost.
"""

from guinand import pair, parse, sigma_k, sigma_k_hat, verify

phi = parse("t*exp(-pi*t^2/2)").value
print("phi =", phi.to_expr())
print()
print("Both sides of the identity, truncated at N = 400 shells:")
print(f"{'k':>3} {'lhs':>22} {'rhs':>22} {'rel residual':>14} {'tail bound':>12}")
for k in (3, 5, 7, 9, 11):
    rep = verify(k, phi, 400)
    print(f"{k:>3} {rep.lhs.real:>22.15f} {rep.rhs.real:>22.15f} "
          f"{rep.rel_residual:>14.2e} {rep.tail_bound_lhs:>12.2e}")

print()
print("k = 3 pins the classical constant:")
print("  1 + sum r_3(n) e^{-pi n/2} = 2.860237190695389...")

print()
print("Self-duality at k = 3, at the level of individual atoms:")
sig = sigma_k(3, 50)
hat = sigma_k_hat(3, 50)
print("  sigma_3_hat atoms == -i * sigma_3 atoms exactly:",
      all(b.weight == -1j * a.weight for a, b in zip(sig.atoms, hat.atoms)))

print()
print("Duality as a pairing statement, <sigma_k_hat, phi> = <sigma_k, FT phi>:")
for k in (3, 5, 7):
    a = pair(sigma_k_hat(k, 400), phi)
    b = pair(sigma_k(k, 400), phi.fourier())
    print(f"  k={k}: {a:.12g}  vs  {b:.12g}")
