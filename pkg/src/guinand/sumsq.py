"""Sum-of-k-squares counts r_k(n) = #{m in Z^k : |m|^2 = n}.

Two independent computation routes:

* ``rk_table`` builds the whole table 0..max_n by k-fold convolution of the
  one-dimensional row r_1 (1 at 0, 2 at positive perfect squares, else 0),
  in exact unbounded-integer arithmetic.
* ``rk_bruteforce`` counts a single value by exhausting the lattice box
  [-isqrt(n), isqrt(n)]^k, organized as a sign-symmetric depth-first scan
  with radius pruning so small instances finish quickly.  It shares no code
  or data with the convolution route and serves as its oracle.

Both reject oversized requests instead of truncating.  All values are
immutable after construction and both routes are pure, so results can be
shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import WorkCapExceeded

DEFAULT_TABLE_CAP = 10 ** 6   # largest max_n accepted by rk_table
DEFAULT_BOX_CAP = 10 ** 9     # largest k*(2*isqrt(n)+1)^k accepted by rk_bruteforce


@dataclass(frozen=True)
class RepTable:
    """counts[n] = r_k(n) for 0 <= n <= max_n, as exact integers."""

    k: int
    max_n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.max_n + 1:
            raise ValueError("counts length must be max_n + 1")


def r1_row(max_n: int) -> tuple[int, ...]:
    """r_1: two representations n = (+-isqrt(n))^2 at positive perfect squares."""
    row = [0] * (max_n + 1)
    row[0] = 1
    j = 1
    while j * j <= max_n:
        row[j * j] = 2
        j += 1
    return tuple(row)


def rk_table(k: int, max_n: int, *, table_cap: int = DEFAULT_TABLE_CAP) -> RepTable:
    """Exact r_k table on 0..max_n via iterated convolution with r_1."""
    if k < 1:
        raise ValueError(f"dimension k must be >= 1, got {k}")
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    if max_n > table_cap:
        raise WorkCapExceeded(
            f"table size {max_n + 1} exceeds cap {table_cap + 1}; "
            f"raise the cap explicitly if this is intended")
    counts = list(r1_row(max_n))
    for _ in range(k - 1):
        # convolve with the sparse r_1 row: c[n] = a[n] + 2*sum_{j>=1} a[n-j^2]
        prev = counts
        counts = list(prev)
        for n in range(1, max_n + 1):
            acc = prev[n]
            j = 1
            jj = 1
            while jj <= n:
                acc += 2 * prev[n - jj]
                j += 1
                jj = j * j
            counts[n] = acc
    return RepTable(k, max_n, tuple(counts))


def rk_bruteforce(k: int, n: int, *, box_cap: int = DEFAULT_BOX_CAP) -> int:
    """r_k(n) by exhaustive scan of the box [-isqrt(n), isqrt(n)]^k.

    Coordinates are scanned depth first over their absolute values with the
    remaining budget n - sum of squares so far; each completed vector is
    counted with multiplicity 2^(number of nonzero coordinates), which
    enumerates the full box exactly once.
    """
    if k < 1:
        raise ValueError(f"dimension k must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    side = 2 * math.isqrt(n) + 1
    if k * side ** k > box_cap:
        raise WorkCapExceeded(
            f"brute-force box estimate {k * side ** k} exceeds cap {box_cap}")

    def count(dim: int, rem: int) -> int:
        if dim == 1:
            if rem == 0:
                return 1
            r = math.isqrt(rem)
            return 2 if r * r == rem else 0
        total = count(dim - 1, rem)        # this coordinate = 0
        j = 1
        while j * j <= rem:
            total += 2 * count(dim - 1, rem - j * j)
            j += 1
        return total

    return count(k, n)


def ball_count(table: RepTable) -> int:
    """Number of integer points in the closed ball |m|^2 <= max_n."""
    return sum(table.counts)
