"""Closed-form polynomials for the uncovered-vertex counts.

Within each residue class r = n mod 3 the sequence n -> uncovered_sequence(k, n)
agrees with a single polynomial of degree at most k - 1 with rational
coefficients.  This module derives that polynomial constructively: Lagrange
interpolation through the first k in-class sample points, followed by a
mandatory re-check against k further points.  A mismatch at the re-check
stage means the degree bound failed and raises DegreeBoundViolation.

Twelve reference polynomials (k = 1..4, r = 0..2) are hard-coded in
``table1`` as golden fixtures; ``derive_poly`` must reproduce them
coefficient for coefficient.  Two cells sit strictly below the degree
bound: (k=3, r=2) has degree 1 and (k=4, r=1) has degree 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequences import uncovered_sequence


class DegreeBoundViolation(RuntimeError):
    """Interpolated polynomial failed its held-out verification points."""


@dataclass(frozen=True, slots=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, tied to a class (k, r).

    ``coeffs`` is stored lowest power first with trailing zeros trimmed, so
    the zero polynomial has an empty coefficient tuple and degree -inf.
    """

    k: int
    r: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.r not in (0, 1, 2):
            raise ValueError(f"residue class must be 0, 1 or 2, got {self.r}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) - 1 > self.k - 1:
            raise ValueError(
                f"degree {len(coeffs) - 1} exceeds bound {self.k - 1} for k={self.k}"
            )

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            body = str(abs(c)) if power == 0 else f"{abs(c)}*n^{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> dict:
        """JSON-ready form; coefficients as exact strings, lowest power first."""
        return {"k": self.k, "r": self.r, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalPoly":
        return cls(
            k=int(data["k"]),
            r=int(data["r"]),
            coeffs=tuple(Fraction(c) for c in data["coeffs"]),
        )


def _poly_mul_linear(p: list[Fraction], root: int) -> list[Fraction]:
    # multiply p (lowest power first) by (n - root)
    out = [Fraction(0)] * (len(p) + 1)
    for d, c in enumerate(p):
        out[d] -= c * root
        out[d + 1] += c
    return out


def _lagrange(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    total = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = _poly_mul_linear(basis, xj)
            denom *= xi - xj
        scale = yi / denom
        for d, c in enumerate(basis):
            total[d] += c * scale
    return total


def derive_poly(k: int, r: int) -> RationalPoly:
    """Interpolate the degree <= k-1 polynomial for class (k, r) and verify it.

    Sample points are n = r, r+3, ..., r+3(k-1); the held-out check points
    are the next k in-class values n = r+3k, ..., r+3(2k-1).  Any check
    failure raises DegreeBoundViolation: it can only mean this implementation
    is wrong, never that the degree bound is.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if r not in (0, 1, 2):
        raise ValueError(f"residue class must be 0, 1 or 2, got {r}")
    xs = [r + 3 * i for i in range(k)]
    ys = [Fraction(uncovered_sequence(k, x)) for x in xs]
    poly = RationalPoly(k=k, r=r, coeffs=tuple(_lagrange(xs, ys)))
    for i in range(k, 2 * k):
        n = r + 3 * i
        got = eval_poly(poly, n)
        want = uncovered_sequence(k, n)
        if got != want:
            raise DegreeBoundViolation(
                f"class (k={k}, r={r}): interpolant gives {got} at n={n}, "
                f"recursion gives {want}"
            )
    return poly


def eval_poly(poly: RationalPoly, n: int) -> Fraction:
    """Horner evaluation at an in-class point; exact rational result."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % 3 != poly.r:
        raise ValueError(
            f"n={n} is in residue class {n % 3}, polynomial is for class {poly.r}"
        )
    acc = Fraction(0)
    for c in reversed(poly.coeffs):
        acc = acc * n + c
    return acc


# Reference polynomials, coefficients lowest power first.
_TABLE1: dict[tuple[int, int], tuple[str, ...]] = {
    (1, 0): ("1",),
    (1, 1): (),
    (1, 2): ("1",),
    (2, 0): ("1",),
    (2, 1): ("4/3", "2/3"),
    (2, 2): ("5/3", "2/3"),
    (3, 0): ("1", "2/3", "2/9"),
    (3, 1): ("8/9", "8/9", "2/9"),
    (3, 2): ("5/3", "2/3"),
    (4, 0): ("1", "2/9", "2/9", "4/81"),
    (4, 1): ("8/9", "8/9", "2/9"),
    (4, 2): ("103/81", "10/27", "4/27", "4/81"),
}


def table1(k: int, r: int) -> RationalPoly:
    """Hard-coded reference polynomial for class (k, r), k limited to 1..4."""
    if not 1 <= k <= 4:
        raise ValueError(f"reference table covers k = 1..4 only, got {k}")
    if r not in (0, 1, 2):
        raise ValueError(f"residue class must be 0, 1 or 2, got {r}")
    return RationalPoly(k=k, r=r, coeffs=tuple(Fraction(c) for c in _TABLE1[(k, r)]))
