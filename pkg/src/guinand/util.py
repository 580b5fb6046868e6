"""Small numeric helpers."""

from __future__ import annotations


class CompensatedSum:
    """Neumaier-compensated accumulator for complex values.

    The result is deterministic for a fixed order of ``add`` calls, which is
    what makes pairing and series evaluation reproducible run to run.
    """

    __slots__ = ("_sr", "_si", "_cr", "_ci")

    def __init__(self) -> None:
        self._sr = 0.0
        self._si = 0.0
        self._cr = 0.0
        self._ci = 0.0

    def add(self, z: complex) -> None:
        z = complex(z)
        self._sr, self._cr = _neumaier_step(self._sr, self._cr, z.real)
        self._si, self._ci = _neumaier_step(self._si, self._ci, z.imag)

    @property
    def total(self) -> complex:
        return complex(self._sr + self._cr, self._si + self._ci)


def _neumaier_step(s: float, c: float, x: float) -> tuple[float, float]:
    t = s + x
    if abs(s) >= abs(x):
        c += (s - t) + x
    else:
        c += (x - t) + s
    return t, c


def comp_sum(values) -> complex:
    """Compensated sum of an iterable of complex values, in iteration order."""
    acc = CompensatedSum()
    for v in values:
        acc.add(v)
    return acc.total


def rel_diff(a: complex, b: complex, floor: float = 1e-300) -> float:
    """|a-b| relative to max(|a|, |b|, floor)."""
    return abs(a - b) / max(abs(a), abs(b), floor)
