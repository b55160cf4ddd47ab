"""Recurrence-defined packing and uncovered-count sequences.

For the Fibonacci cube of dimension n and subcube order k >= 1, this module
evaluates two integer sequence families defined by step-3 recurrences in n:

    uncovered_sequence(k, n) = uncovered_sequence(k, n-3) + 2 * uncovered_sequence(k-1, n-2)
    packing_sequence(k, n)   = packing_sequence(k-1, n-2) + packing_sequence(k, n-3)

for k >= 2 and n >= 3, with base rows

    uncovered_sequence(1, n) = 0 if n % 3 == 1 else 1
    uncovered_sequence(k, 0..2) = 1, 2, 3                      (k >= 2)
    packing_sequence(1, 0..2)   = 0, 1, 1
    packing_sequence(k, 0..2)   = 0, 0, 0                      (k >= 2)

The k = 1 row of the packing recurrence expands the k-1 term as the trivial
count of 0-dimensional cubes, fib(n), rather than introducing a k = 0 row:

    packing_sequence(1, n) = fib(n) + packing_sequence(1, n-3)  (n >= 3)

The two families are linked by uncovered = fib(n+2) - 2**k * packing, are
computed independently here, and are permanently cross-checked through
``packing_from_uncovered``.  Exact integer arithmetic throughout.

A caution on interpretation.  These recurrences are commonly read as the
maximum number of disjoint k-subcubes in the cube and the vertices such a
maximum family misses.  That reading is wrong in general: exhaustive search
over explicitly built cubes (see fibcube.packing) produces verified packings
strictly larger than the recurrence value at

    (k=2, n=7):  true maximum 8,  recurrence 7
    (k=2, n=8):  true maximum 13, recurrence 12
    (k=3, n=9):  true maximum 10, recurrence 8
    (k=2, n=10): verified packing of 35, recurrence 34

while agreeing everywhere else it has been checked (k=1 for n <= 20, k=2 for
n <= 6 and n = 9, k=3 for n <= 8, k=4 for n <= 10).  Use max_packing for
ground truth on small cubes; treat these sequences as what they are, the
exact solution of the recurrences above.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import fib


class InternalConsistencyError(RuntimeError):
    """The two sequence families disagree; signals a bug, must never fire."""


class SequenceTable:
    """Dense bottom-up tables of both recurrence families.

    Built single-threaded, then immutable: query methods are read-only.
    """

    __slots__ = ("max_k", "max_n", "_uncov", "_pack")

    def __init__(self, max_k: int, max_n: int):
        if max_k < 1 or max_n < 0:
            raise ValueError(f"need max_k >= 1 and max_n >= 0, got ({max_k}, {max_n})")
        self.max_k = max_k
        self.max_n = max_n
        # row index k-1, column index n
        uncov = [[0] * (max_n + 1) for _ in range(max_k)]
        pack = [[0] * (max_n + 1) for _ in range(max_k)]
        for n in range(max_n + 1):
            uncov[0][n] = 0 if n % 3 == 1 else 1
        for n in range(min(2, max_n) + 1):
            pack[0][n] = (0, 1, 1)[n]
        for n in range(3, max_n + 1):
            pack[0][n] = fib(n) + pack[0][n - 3]
        for k in range(2, max_k + 1):
            row_u, row_p = uncov[k - 1], pack[k - 1]
            prev_u, prev_p = uncov[k - 2], pack[k - 2]
            for n in range(min(2, max_n) + 1):
                row_u[n] = n + 1
            for n in range(3, max_n + 1):
                row_u[n] = row_u[n - 3] + 2 * prev_u[n - 2]
                row_p[n] = prev_p[n - 2] + row_p[n - 3]
        self._uncov = uncov
        self._pack = pack

    def _check(self, k: int, n: int) -> None:
        if k < 1:
            raise ValueError(f"subcube order must be >= 1, got {k}")
        if n < 0:
            raise ValueError(f"dimension must be >= 0, got {n}")
        if k > self.max_k or n > self.max_n:
            raise ValueError(
                f"({k}, {n}) outside table bounds ({self.max_k}, {self.max_n})"
            )

    def uncovered(self, k: int, n: int) -> int:
        self._check(k, n)
        return self._uncov[k - 1][n]

    def packing(self, k: int, n: int) -> int:
        self._check(k, n)
        return self._pack[k - 1][n]


_table = SequenceTable(6, 128)


def _lookup(k: int, n: int) -> SequenceTable:
    global _table
    if k < 1:
        raise ValueError(f"subcube order must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"dimension must be >= 0, got {n}")
    if k > _table.max_k or n > _table.max_n:
        _table = SequenceTable(max(k, 2 * _table.max_k), max(n, 2 * _table.max_n))
    return _table


def uncovered_sequence(k: int, n: int) -> int:
    """Uncovered-count recurrence value at (k, n).

    Equals the number of vertices a maximum disjoint k-subcube family leaves
    uncovered for most small (k, n), but is strictly too large at known cells;
    see the module docstring and fibcube.packing.max_packing.
    """
    return _lookup(k, n).uncovered(k, n)


def packing_sequence(k: int, n: int) -> int:
    """Packing recurrence value at (k, n).

    Equals the maximum number of disjoint k-subcubes for most small (k, n),
    but is strictly too small at known cells; see the module docstring and
    fibcube.packing.max_packing.
    """
    return _lookup(k, n).packing(k, n)


def packing_from_uncovered(k: int, n: int) -> int:
    """Packing value recomputed as (fib(n+2) - uncovered_sequence(k, n)) / 2**k.

    Independent of packing_sequence's recurrence; the division must be exact.
    """
    diff = fib(n + 2) - uncovered_sequence(k, n)
    q, rem = divmod(diff, 1 << k)
    if rem:
        raise InternalConsistencyError(
            f"fib({n + 2}) - uncovered_sequence({k}, {n}) = {diff} "
            f"is not divisible by 2**{k}"
        )
    return q


def check_identity(k: int, n: int) -> bool:
    """Check 2*uncovered_sequence(k, n-2) + uncovered_sequence(k+1, n-3) == uncovered_sequence(k+1, n)."""
    if k < 1:
        raise ValueError(f"subcube order must be >= 1, got {k}")
    if n < 3:
        raise ValueError(f"identity needs n >= 3, got {n}")
    lhs = 2 * uncovered_sequence(k, n - 2) + uncovered_sequence(k + 1, n - 3)
    return lhs == uncovered_sequence(k + 1, n)


def coverage_ratio(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Exact (uncovered, covered) fractions of the vertex set per the recurrences.

    Covered means 2**k * packing_sequence(k, n) of the fib(n+2) vertices; the
    two fractions sum to exactly 1.  As n grows with k fixed the uncovered
    fraction vanishes, since the uncovered values grow polynomially in n
    (see fibcube.polynomials) while the vertex count grows geometrically.
    """
    total = fib(n + 2)
    missed = Fraction(uncovered_sequence(k, n), total)
    covered = Fraction((1 << k) * packing_sequence(k, n), total)
    return missed, covered


@dataclass(frozen=True, slots=True)
class AsymptoticConstants:
    """Floating constants of the vertex-count growth law.

    The vertex count fib(n+2) grows like leading * golden_ratio**n, with
    leading = (3 + sqrt 5) / (2 sqrt 5).  Both constants are IEEE doubles,
    accurate to about 1e-16 relative.
    """

    golden_ratio: float
    leading: float
    precision: float = 1e-15


ASYMPTOTICS = AsymptoticConstants(
    golden_ratio=(1.0 + math.sqrt(5.0)) / 2.0,
    leading=(3.0 + math.sqrt(5.0)) / (2.0 * math.sqrt(5.0)),
)


def fib_asymptotic_estimate(n: int) -> float:
    """Floating estimate of fib(n+2); relative error shrinks rapidly with n."""
    if n < 0:
        raise ValueError(f"dimension must be >= 0, got {n}")
    return ASYMPTOTICS.leading * ASYMPTOTICS.golden_ratio**n
