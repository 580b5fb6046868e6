"""Truncated temperate distributions as finite combs of derivative-delta atoms.

An atom is a weighted functional delta_x^(j) acting on test functions by

    <delta_x^(j), f> = (-1)^j f^(j)(x),

the standard distribution-theory sign; with that convention the comb
-2 delta'_0 pairs with an odd phi to 2 phi'(0), matching the left-hand side
phi'(0) + sum ... of the summation identities after the odd doubling.

The combs built here are truncations of

    sigma_k     = -2 delta'_0 + sum_n r_k(n)/sqrt(n) (d_{sqrt n} - d_{-sqrt n})
    sigma_k_hat = 2 i alpha_k d^(k-2)_0
                  - i sum_n r_k(n)/n^((k-2)/2)
                    sum_j beta_jk n^(j/2) ((-1)^j d^(j)_{sqrt n} - d^(j)_{-sqrt n})

together with their generalizations to arbitrary point measures mu on R^k
with locally finite support (``project_measure`` / ``project_ft``), where the
shell weight r_k(n) is replaced by the sum of mu-weights on the sphere of
radius |lambda| and an origin mass feeds the delta'_0 / d^(k-2)_0 atom.

Locations are sqrt(shell) with the shell kept exact (int or Fraction)
alongside the float, so atoms on equal shells merge by exact comparison,
never by float equality.  Pairing accumulates in ascending (location, order)
with compensated summation, which makes results reproducible.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .coeffs import alpha, betas
from .schwartz import GaussPoly
from .sumsq import rk_table
from .util import CompensatedSum

__all__ = [
    "Atom", "AtomComb", "PointMeasure", "make_comb", "pair",
    "sigma_k", "sigma_k_hat", "project_measure", "project_ft",
    "comb_to_json", "comb_from_json", "point_measure",
]


@dataclass(frozen=True)
class Atom:
    """Weighted derivative-delta: weight * delta_location^(order)."""

    location: float
    order: int
    weight: complex
    shell: int | Fraction | None = None  # exact location**2 when known

    def pair(self, derivs) -> complex:
        return self.weight * (-1) ** self.order * derivs[self.order].eval(self.location)


@dataclass(frozen=True)
class AtomComb:
    """Finite comb, atoms sorted by (location, order), duplicates merged."""

    atoms: tuple[Atom, ...]
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def max_order(self) -> int:
        return max((a.order for a in self.atoms), default=0)


def make_comb(atoms, **meta) -> AtomComb:
    """Merge duplicate (location, order) atoms and sort.

    Atoms carrying an exact shell merge by (sign, shell, order); others by
    the float location.
    """
    merged: dict = {}
    for a in atoms:
        if a.shell is not None:
            key = ("shell", a.location < 0, Fraction(a.shell), a.order)
        else:
            key = ("float", a.location, a.order)
        if key in merged:
            old = merged[key]
            merged[key] = Atom(old.location, old.order, old.weight + a.weight,
                               old.shell)
        else:
            merged[key] = a
    kept = [a for a in merged.values() if a.weight != 0]
    kept.sort(key=lambda a: (a.location, a.order))
    return AtomComb(tuple(kept), dict(meta))


def pair(comb: AtomComb, f: GaussPoly) -> complex:
    """<comb, f> = sum of weight * (-1)^order * f^(order)(location).

    Summation runs in the comb's canonical (location, order) order with
    compensated accumulation.
    """
    derivs = [f]
    for _ in range(comb.max_order):
        derivs.append(derivs[-1].derivative())
    acc = CompensatedSum()
    for atom in comb.atoms:
        acc.add(atom.pair(derivs))
    return acc.total


# --------------------------------------------------------------------------
# shell -> atoms helpers shared by the sigma builders and the projections
# --------------------------------------------------------------------------

def _sigma_shell_atoms(v: float, shell, weight_sum: complex) -> list[Atom]:
    # weight_sum/|v| (d_{+v} - d_{-v})
    w = weight_sum / v
    return [Atom(v, 0, w, shell), Atom(-v, 0, -w, shell)]


def _hat_shell_atoms(k: int, v: float, shell, base_by_j) -> list[Atom]:
    # -i * base_j / v^(k-2) * v^j * ((-1)^j d^(j)_{+v} - d^(j)_{-v})
    out = []
    for j, base in enumerate(base_by_j):
        mag = base * v ** j / v ** (k - 2)
        out.append(Atom(v, j, (-1j) * (mag if j % 2 == 0 else -mag), shell))
        out.append(Atom(-v, j, (1j) * mag, shell))
    return out


def _hat_origin_atom(k: int, b0: complex, alpha_f: float) -> Atom:
    return Atom(0.0, k - 2, (2j * b0) * alpha_f, 0)


def sigma_k(k: int, N: int) -> AtomComb:
    """Truncation of sigma_k to shells n <= N (plus the origin atom)."""
    _check_k(k)
    table = rk_table(k, N)
    atoms = [Atom(0.0, 1, complex(-2.0), 0)]
    for n in range(1, N + 1):
        r = table.counts[n]
        if r:
            atoms.extend(_sigma_shell_atoms(math.sqrt(n), n, complex(r)))
    return make_comb(atoms, k=k, N=N, parity="odd")


def sigma_k_hat(k: int, N: int) -> AtomComb:
    """Truncation of the transform of sigma_k to shells n <= N.

    The rational-times-pi parts of the weights (r_k(n) * beta_jk) are kept
    exact and converted to float once per atom; only the sqrt(n) powers are
    floating point.
    """
    _check_k(k)
    table = rk_table(k, N)
    beta_list = betas(k)
    atoms = [_hat_origin_atom(k, complex(1.0), alpha(k).to_float())]
    for n in range(1, N + 1):
        r = table.counts[n]
        if r:
            base_by_j = [(r * b).to_float() for b in beta_list]
            atoms.extend(_hat_shell_atoms(k, math.sqrt(n), n, base_by_j))
    return make_comb(atoms, k=k, N=N, parity="odd")


# --------------------------------------------------------------------------
# general point measures
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PointMeasure:
    """Finitely many weighted points in R^k (a truncation of a measure with
    locally finite support)."""

    k: int
    atoms: tuple[tuple[tuple, complex], ...]


def point_measure(k: int, entries) -> PointMeasure:
    """Build a PointMeasure; duplicate points are merged exactly."""
    merged: dict = {}
    for point, weight in entries:
        key = tuple(Fraction(x) for x in point)
        if len(key) != k:
            raise ValueError(f"point {point!r} does not have dimension {k}")
        merged[key] = merged.get(key, 0j) + complex(weight)
    return PointMeasure(k, tuple(sorted(merged.items())))


def _shells(mu: PointMeasure):
    """Group points by the exact squared radius; returns (origin_weight,
    {shell: weight_sum}) with integer shells normalized to int."""
    origin = 0j
    shells: dict = {}
    for point, weight in mu.atoms:
        nsq = sum(Fraction(x) ** 2 for x in point)
        if nsq == 0:
            origin += weight
            continue
        nsq = int(nsq) if nsq.denominator == 1 else nsq
        shells[nsq] = shells.get(nsq, 0j) + weight
    return origin, shells


def project_measure(mu: PointMeasure) -> AtomComb:
    """The 1-D comb -2 a(0) delta'_0 + sum a(lambda)/|lambda| (d_{|l|} - d_{-|l|})."""
    _check_k(mu.k)
    a0, shells = _shells(mu)
    atoms = []
    if a0 != 0:
        atoms.append(Atom(0.0, 1, -2 * a0, 0))
    for nsq in sorted(shells):
        v = math.sqrt(float(nsq))
        atoms.extend(_sigma_shell_atoms(v, nsq, shells[nsq]))
    return make_comb(atoms, k=mu.k, parity="odd")


def project_ft(mu_hat: PointMeasure, k: int) -> AtomComb:
    """The 1-D comb for the transform: 2 i b(0) alpha_k d^(k-2)_0 minus the
    beta-weighted derivative atoms at +-|s| for each shell of mu_hat."""
    _check_k(k)
    if mu_hat.k != k:
        raise ValueError(f"measure dimension {mu_hat.k} != k = {k}")
    b0, shells = _shells(mu_hat)
    beta_floats = [b.to_float() for b in betas(k)]
    atoms = []
    if b0 != 0:
        atoms.append(_hat_origin_atom(k, b0, alpha(k).to_float()))
    for nsq in sorted(shells):
        v = math.sqrt(float(nsq))
        base_by_j = [shells[nsq] * bf for bf in beta_floats]
        atoms.extend(_hat_shell_atoms(k, v, nsq, base_by_j))
    return make_comb(atoms, k=k, parity="odd")


def _check_k(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be an odd integer >= 3, got {k}")


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def comb_to_json(comb: AtomComb) -> str:
    """JSON array of {n, location, order, weight: [re, im]}; n is the exact
    integer shell when available, else null."""
    rows = []
    for a in comb.atoms:
        n = a.shell if isinstance(a.shell, int) else None
        rows.append({"n": n, "location": a.location, "order": a.order,
                     "weight": [a.weight.real, a.weight.imag]})
    return json.dumps(rows)


def comb_from_json(text: str) -> AtomComb:
    atoms = []
    for row in json.loads(text):
        wre, wim = row["weight"]
        n = row["n"]
        loc = float(row["location"])
        atoms.append(Atom(loc, int(row["order"]), complex(wre, wim),
                          None if n is None else int(n)))
    return make_comb(atoms)
