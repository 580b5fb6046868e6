"""Two-sided evaluation of the summation identities, with tail certificates.

For an odd Schwartz function phi with psi its Fourier transform, and each
odd k >= 3, the identity under test is

    phi'(0) + sum_{n>=1} r_k(n)/sqrt(n) phi(sqrt n)
      = i alpha_k psi^(k-2)(0)
        + i sum_{n>=1} r_k(n)/n^((k-2)/2)
            sum_{j=0}^{(k-3)/2} beta_jk n^(j/2) psi^(j)(sqrt n).

``verify`` evaluates both sides at a truncation N, reports absolute and
relative residuals, and attaches certified bounds on the discarded tails.
For k = 3 and k = 5 it additionally evaluates the specialized explicit
forms (i psi'(0) + i sum r_3(n)/sqrt(n) psi(sqrt n), and the
psi - sqrt(n) psi' combination with prefactor i/(2 pi), written with their
literal constants rather than through the coefficient machinery) and
insists they agree with the general path to 1e-13 relative.

``verify_shifted`` does the same for the shifted-lattice identity: with
eta, xi in R^k \\ Z^k, the measure

    sigma = sum_{m in Z^k} e^{2 pi i <m,xi>}/|m+eta| (d_{|m+eta|} - d_{-|m+eta|})

has transform

    sigma_hat = -i e^{-2 pi i <eta,xi>} sum_{m in Z^k}
        e^{-2 pi i <m,eta>}/|m+xi|^(k-2)
        sum_j beta_jk |m+xi|^j ((-1)^j d^(j)_{|m+xi|} - d^(j)_{-|m+xi|}).

Both sides are evaluated through the atom-comb pairing.  Since psi_hat is
the reflection of phi and both distributions are odd, <sigma, phi> equals
minus the pairing of the sigma_hat comb against psi, which is how the
right-hand side is computed.

Tail policy (ours; the identities themselves say nothing about rates): the
discarded shells are dominated by r_k(n) <= (2 sqrt(n) + 1)^k times the
term's explicit polynomial-times-Gaussian envelope, summed with a geometric
remainder certificate once the stepwise ratio bound drops below one.
Bounds below 1e-300 are clamped to zero.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .atoms import make_comb, pair, _hat_shell_atoms, _sigma_shell_atoms
from .coeffs import alpha, betas
from .errors import WorkCapExceeded
from .schwartz import GaussPoly
from .sumsq import rk_table
from .util import CompensatedSum, rel_diff

__all__ = [
    "VerificationReport", "lhs_general", "rhs_general", "verify",
    "shifted_nodes", "verify_shifted", "tail_bound", "shell_table",
    "DEFAULT_N", "DEFAULT_LATTICE_CAP",
]

DEFAULT_N = 400
DEFAULT_LATTICE_CAP = 10 ** 8
_SPECIAL_FORM_RTOL = 1e-13


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of one identity check plus residuals and truncation data."""

    identity: str
    k: int
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tail_bound_lhs: float
    tail_bound_rhs: float
    terms_used: int
    truncation: dict

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tail_bound_lhs": self.tail_bound_lhs,
            "tail_bound_rhs": self.tail_bound_rhs,
            "terms_used": self.terms_used,
            "truncation": dict(self.truncation),
        }


def _require_odd_phi(phi: GaussPoly) -> None:
    if not phi.is_odd():
        raise ValueError("phi must be odd (even-power coefficients must vanish); "
                         "apply odd_part first")


def _check_k(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be an odd integer >= 3, got {k}")


def lhs_general(k: int, phi: GaussPoly, N: int) -> complex:
    """phi'(0) + sum_{n<=N} r_k(n)/sqrt(n) phi(sqrt n), ascending n."""
    _check_k(k)
    _require_odd_phi(phi)
    table = rk_table(k, N)
    acc = CompensatedSum()
    acc.add(phi.derivative().eval(0.0))
    for n in range(1, N + 1):
        r = table.counts[n]
        if r:
            s = math.sqrt(n)
            acc.add(r / s * phi.eval(s))
    return acc.total


def rhs_general(k: int, psi: GaussPoly, N: int) -> complex:
    """i alpha_k psi^(k-2)(0) + i sum_{n<=N} r_k(n)/n^((k-2)/2)
    sum_j beta_jk n^(j/2) psi^(j)(sqrt n), ascending n."""
    _check_k(k)
    table = rk_table(k, N)
    beta_f = [b.to_float() for b in betas(k)]
    derivs = [psi]
    for _ in range(k - 2):
        derivs.append(derivs[-1].derivative())
    acc = CompensatedSum()
    acc.add(1j * alpha(k).to_float() * derivs[k - 2].eval(0.0))
    for n in range(1, N + 1):
        r = table.counts[n]
        if not r:
            continue
        s = math.sqrt(n)
        inner = CompensatedSum()
        for j, bf in enumerate(beta_f):
            inner.add(bf * s ** j * derivs[j].eval(s))
        acc.add(1j * (r / s ** (k - 2)) * inner.total)
    return acc.total


def _rhs_explicit_k3(psi: GaussPoly, N: int) -> complex:
    # i psi'(0) + i sum r_3(n)/sqrt(n) psi(sqrt n)
    table = rk_table(3, N)
    acc = CompensatedSum()
    acc.add(1j * psi.derivative().eval(0.0))
    for n in range(1, N + 1):
        r = table.counts[n]
        if r:
            s = math.sqrt(n)
            acc.add(1j * r / s * psi.eval(s))
    return acc.total


def _rhs_explicit_k5(psi: GaussPoly, N: int) -> complex:
    # -i/(6 pi) psi'''(0) + i/(2 pi) sum r_5(n)/n^(3/2) [psi(sqrt n) - sqrt(n) psi'(sqrt n)]
    table = rk_table(5, N)
    dpsi = psi.derivative()
    acc = CompensatedSum()
    acc.add(-1j / (6.0 * math.pi) * psi.derivative(3).eval(0.0))
    for n in range(1, N + 1):
        r = table.counts[n]
        if r:
            s = math.sqrt(n)
            acc.add(1j / (2.0 * math.pi) * r / s ** 3
                    * (psi.eval(s) - s * dpsi.eval(s)))
    return acc.total


def verify(k: int, phi: GaussPoly, N: int = DEFAULT_N, tol: float = 1e-9) -> VerificationReport:
    """Evaluate both sides at truncation N and report residuals.

    For k in {3, 5} the specialized explicit form of the right-hand side is
    evaluated as well and must agree with the general path to 1e-13
    relative; a mismatch raises, since it would mean the coefficient
    machinery and the literal constants disagree.
    """
    _check_k(k)
    _require_odd_phi(phi)
    psi = phi.fourier()
    lhs = lhs_general(k, phi, N)
    rhs = rhs_general(k, psi, N)
    if k == 3:
        special = _rhs_explicit_k3(psi, N)
    elif k == 5:
        special = _rhs_explicit_k5(psi, N)
    else:
        special = None
    if special is not None and rel_diff(special, rhs) > _SPECIAL_FORM_RTOL:
        raise ValueError(
            f"specialized k={k} form disagrees with the general path: "
            f"{special!r} vs {rhs!r}")
    table = rk_table(k, N)
    identity = {3: "guinand", 5: "k5"}.get(k, "general-k")
    return VerificationReport(
        identity=identity,
        k=k,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs(lhs - rhs),
        rel_residual=rel_diff(lhs, rhs),
        tail_bound_lhs=tail_bound(k, phi, N),
        tail_bound_rhs=_rhs_tail_bound(k, psi, N),
        terms_used=sum(1 for n in range(1, N + 1) if table.counts[n]),
        truncation={"N": N},
    )


def shell_table(k: int, phi: GaussPoly, N: int) -> list[dict]:
    """Per-shell terms and running partial sums of both sides (plot data)."""
    _check_k(k)
    _require_odd_phi(phi)
    psi = phi.fourier()
    table = rk_table(k, N)
    beta_f = [b.to_float() for b in betas(k)]
    derivs = [psi]
    for _ in range((k - 3) // 2):
        derivs.append(derivs[-1].derivative())
    lhs_acc = CompensatedSum()
    lhs_acc.add(phi.derivative().eval(0.0))
    rhs_acc = CompensatedSum()
    rhs_acc.add(1j * alpha(k).to_float() * psi.derivative(k - 2).eval(0.0))
    rows = [{"n": 0, "r_k": 1, "lhs_term": lhs_acc.total, "rhs_term": rhs_acc.total,
             "lhs_partial": lhs_acc.total, "rhs_partial": rhs_acc.total}]
    for n in range(1, N + 1):
        r = table.counts[n]
        if not r:
            continue
        s = math.sqrt(n)
        lt = r / s * phi.eval(s)
        inner = CompensatedSum()
        for j, bf in enumerate(beta_f):
            inner.add(bf * s ** j * derivs[j].eval(s))
        rt = 1j * (r / s ** (k - 2)) * inner.total
        lhs_acc.add(lt)
        rhs_acc.add(rt)
        rows.append({"n": n, "r_k": r, "lhs_term": lt, "rhs_term": rt,
                     "lhs_partial": lhs_acc.total, "rhs_partial": rhs_acc.total})
    return rows


# --------------------------------------------------------------------------
# tail certificates for the sqrt(n)-node series
# --------------------------------------------------------------------------

def _sqrtn_tail(k: int, pieces, N: int) -> float:
    """Certified bound on sum_{n>N} (2 sqrt(n)+1)^k * n^(p/2) * C * e^(-pi a n)
    over envelope pieces (C, p, a).

    Uses r_k(n) <= (2 sqrt(n)+1)^k.  Stepwise, the ratio of consecutive
    terms is at most ((2 sqrt(n+1)+1)/(2 sqrt(n)+1))^k * ((n+1)/n)^(max(p,0)/2)
    * e^(-pi a); once that bound drops below 1 the remainder is dominated by
    a geometric series.
    """
    total = 0.0
    for C, p, a in pieces:
        if C == 0.0:
            continue
        n = N + 1
        sub = 0.0
        for _ in range(100000):
            g = C * (2.0 * math.sqrt(n) + 1.0) ** k \
                * math.pow(n, p / 2.0) * math.exp(-math.pi * a * n)
            if g == 0.0:
                break
            ratio = ((2.0 * math.sqrt(n + 1) + 1.0) / (2.0 * math.sqrt(n) + 1.0)) ** k \
                * ((n + 1.0) / n) ** (max(p, 0) / 2.0) * math.exp(-math.pi * a)
            if ratio < 1.0:
                sub += g / (1.0 - ratio)
                break
            sub += g
            n += 1
        total += sub
    return 0.0 if total < 1e-300 else total


def _envelope_pieces(f: GaussPoly, extra_half_power: int):
    # (C, p, a) with the term C * n^(p/2) * e^(-pi a n) at node sqrt(n)
    pieces = []
    for a, abscoeffs in f.abs_envelope():
        for m, c in enumerate(abscoeffs):
            if c:
                pieces.append((c, m + extra_half_power, a))
    return pieces


def tail_bound(k: int, f: GaussPoly, N: int) -> float:
    """Certified bound on the discarded left-hand tail
    sum_{n>N} r_k(n) n^(-1/2) |f|(sqrt n)."""
    _check_k(k)
    return _sqrtn_tail(k, _envelope_pieces(f, -1), N)


def _rhs_tail_bound(k: int, psi: GaussPoly, N: int) -> float:
    beta_f = [abs(b.to_float()) for b in betas(k)]
    derivs = [psi]
    for _ in range((k - 3) // 2):
        derivs.append(derivs[-1].derivative())
    total = 0.0
    for j, bf in enumerate(beta_f):
        pieces = [(bf * C, p, a)
                  for C, p, a in _envelope_pieces(derivs[j], j - (k - 2))]
        total += _sqrtn_tail(k, pieces, N)
    return 0.0 if total < 1e-300 else total


# --------------------------------------------------------------------------
# shifted lattices
# --------------------------------------------------------------------------

def _check_shift(k, eta) -> tuple:
    eta = tuple(Fraction(x) for x in eta)
    if len(eta) != k:
        raise ValueError(f"shift vector must have length {k}")
    if all(abs(float(x) - round(float(x))) < 1e-12 for x in eta):
        raise ValueError("shift vector must lie outside Z^k "
                         "(all components are within 1e-12 of integers)")
    return eta


def _shifted_points(k, eta, R, cap):
    """All m in Z^k with |m + eta| <= R, as (m, exact |m+eta|^2) pairs.

    Nested box scan over the coordinate ranges with radius pruning; the
    final acceptance test |m+eta|^2 <= R^2 is exact rational arithmetic.
    """
    if R <= 0:
        raise ValueError(f"radius must be positive, got {R}")
    lo, hi, widths = [], [], []
    for x in eta:
        xf = float(x)
        lo.append(math.ceil(-xf - R - 1e-9))
        hi.append(math.floor(-xf + R + 1e-9))
        widths.append(hi[-1] - lo[-1] + 1)
    estimate = 1
    for w in widths:
        estimate *= max(w, 1)
    if estimate > cap:
        raise WorkCapExceeded(
            f"lattice enumeration estimate {estimate} points exceeds cap {cap}")
    r2 = Fraction(R) ** 2
    r2f = float(r2) + 1e-9
    out = []
    m = [0] * k

    def scan(i, partial_exact, partial_float):
        if i == k:
            if partial_exact <= r2:
                out.append((tuple(m), partial_exact))
            return
        x = eta[i]
        xf = float(x)
        for mi in range(lo[i], hi[i] + 1):
            d = mi + xf
            pf = partial_float + d * d
            if pf > r2f:
                continue
            m[i] = mi
            scan(i + 1, partial_exact + (mi + x) ** 2, pf)

    scan(0, Fraction(0), 0.0)
    return out


def shifted_nodes(k: int, eta, R: float, *, cap: int = DEFAULT_LATTICE_CAP):
    """Lattice points m with |m + eta| <= R and their node radii |m + eta|."""
    _check_k(k)
    eta = _check_shift(k, eta)
    return [{"m": m, "node": math.sqrt(float(nsq))}
            for m, nsq in _shifted_points(k, eta, R, cap)]


_QUARTER_PHASES = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j,
                   Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}


def _phase(dot: Fraction) -> complex:
    # e^(2 pi i dot), argument reduced exactly mod 1 first; quarter turns are
    # exact so that shells whose phase sums cancel identically really cancel
    frac = dot - math.floor(dot)
    exact = _QUARTER_PHASES.get(frac)
    if exact is not None:
        return exact
    return cmath.exp(2j * math.pi * float(frac))


def _shifted_sigma(k, eta, xi, R, cap):
    """Truncated time-side comb: sum e^(2 pi i <m,xi>)/|m+eta| (d_v - d_-v)."""
    shells: dict = {}
    for m, nsq in _shifted_points(k, eta, R, cap):
        dot = sum(mi * x for mi, x in zip(m, xi))
        shells[nsq] = shells.get(nsq, 0j) + _phase(dot)
    atoms = []
    for nsq in sorted(shells):
        v = math.sqrt(float(nsq))
        atoms.extend(_sigma_shell_atoms(v, nsq, shells[nsq]))
    return make_comb(atoms, k=k, R=float(R), parity="odd")


def _shifted_sigma_hat(k, eta, xi, R, cap):
    """Truncated transform comb, prefactor -i e^(-2 pi i <eta,xi>) included
    (the -i lives inside the shell-atom helper)."""
    prefactor = _phase(-sum(e * x for e, x in zip(eta, xi)))
    beta_f = [b.to_float() for b in betas(k)]
    shells: dict = {}
    for m, nsq in _shifted_points(k, xi, R, cap):
        dot = sum(mi * e for mi, e in zip(m, eta))
        shells[nsq] = shells.get(nsq, 0j) + _phase(-dot)
    atoms = []
    for nsq in sorted(shells):
        v = math.sqrt(float(nsq))
        base_by_j = [prefactor * shells[nsq] * bf for bf in beta_f]
        atoms.extend(_hat_shell_atoms(k, v, nsq, base_by_j))
    return make_comb(atoms, k=k, R=float(R), parity="none")


def shifted_lhs_direct(k: int, eta, xi, phi: GaussPoly, R: float,
                       *, cap: int = DEFAULT_LATTICE_CAP) -> complex:
    """<sigma, phi> summed directly over lattice points (no comb), as an
    independent route for cross-checking the comb pairing."""
    _check_k(k)
    eta = _check_shift(k, eta)
    xi = _check_shift(k, xi)
    acc = CompensatedSum()
    for m, nsq in sorted(_shifted_points(k, eta, R, cap), key=lambda p: p[1]):
        v = math.sqrt(float(nsq))
        dot = sum(mi * x for mi, x in zip(m, xi))
        acc.add(_phase(dot) / v * (phi.eval(v) - phi.eval(-v)))
    return acc.total


def verify_shifted(k: int, eta, xi, phi: GaussPoly,
                   R_time: float, R_freq: float, tol: float = 1e-8,
                   *, cap: int = DEFAULT_LATTICE_CAP) -> VerificationReport:
    """Check the shifted-lattice identity through the comb pairing.

    LHS = <sigma, phi> over nodes |m+eta| <= R_time.  RHS = -<sigma_hat, psi>
    over nodes |m+xi| <= R_freq with psi the transform of phi: pairing
    sigma_hat against psi equals <sigma, psi_hat> = -<sigma, phi> because
    psi_hat is the reflection of phi and sigma is odd.
    """
    _check_k(k)
    eta = _check_shift(k, eta)
    xi = _check_shift(k, xi)
    _require_odd_phi(phi)
    psi = phi.fourier()
    time_comb = _shifted_sigma(k, eta, xi, R_time, cap)
    freq_comb = _shifted_sigma_hat(k, eta, xi, R_freq, cap)
    lhs = pair(time_comb, phi)
    rhs = -pair(freq_comb, psi)
    return VerificationReport(
        identity="shifted",
        k=k,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs(lhs - rhs),
        rel_residual=rel_diff(lhs, rhs),
        tail_bound_lhs=_radius_tail(k, _envelope_pieces_u(phi, -1), R_time),
        tail_bound_rhs=_shifted_rhs_tail(k, psi, R_freq),
        terms_used=len(time_comb.atoms) + len(freq_comb.atoms),
        truncation={"R_time": float(R_time), "R_freq": float(R_freq)},
    )


def _envelope_pieces_u(f: GaussPoly, extra_power: int):
    # (C, p, a) with the bound C * u^p * e^(-pi a u^2) at radius u
    return [(c, m + extra_power, a)
            for a, abscoeffs in f.abs_envelope()
            for m, c in enumerate(abscoeffs) if c]


def _radius_tail(k: int, pieces, R: float) -> float:
    """Certified bound for lattice tails beyond radius R.

    Band j covers radii [R+j, R+j+1); it holds at most (2(R+j)+5)^k lattice
    points (each coordinate of a point within radius R+j+1 ranges over an
    interval of length 2(R+j+1)), each weighted by the band supremum of
    u^p times the Gaussian envelope (the envelope supremum sits at the left
    edge once past its peak, at the peak before that; u^p takes whichever
    edge its sign makes larger).  Terms drop like e^(-pi a (2u+1)) once past
    the peak, so a geometric certificate finishes the sum.
    """
    total = 0.0
    for C, p, a in pieces:
        if C == 0.0:
            continue
        peak = math.sqrt(max(p, 0) / (2.0 * math.pi * a)) if p > 0 else 0.0
        sub = 0.0
        for j in range(100000):
            lo = R + j
            count = (2.0 * lo + 5.0) ** k
            w = lo ** p if p < 0 else (lo + 1.0) ** p
            env_at = max(lo, peak)
            g = 2.0 * C * count * w * math.exp(-math.pi * a * env_at * env_at)
            if g == 0.0:
                break
            if lo > peak:
                ratio = ((2.0 * lo + 7.0) / (2.0 * lo + 5.0)) ** k \
                    * ((lo + 2.0) / (lo + 1.0)) ** max(p, 0) \
                    * math.exp(-math.pi * a * (2.0 * lo + 1.0))
                if ratio < 1.0:
                    sub += g / (1.0 - ratio)
                    break
            sub += g
        total += sub
    return 0.0 if total < 1e-300 else total


def _shifted_rhs_tail(k: int, psi: GaussPoly, R: float) -> float:
    beta_f = [abs(b.to_float()) for b in betas(k)]
    derivs = [psi]
    for _ in range((k - 3) // 2):
        derivs.append(derivs[-1].derivative())
    total = 0.0
    for j, bf in enumerate(beta_f):
        pieces = [(bf * C, p, a)
                  for C, p, a in _envelope_pieces_u(derivs[j], j - (k - 2))]
        total += _radius_tail(k, pieces, R)
    return 0.0 if total < 1e-300 else total
