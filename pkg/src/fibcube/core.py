"""Fibonacci numbers and Fibonacci cubes at the bit level.

The Fibonacci cube of dimension n is the subgraph of the n-dimensional
hypercube induced by the binary strings x_1 x_2 ... x_n that contain no
two adjacent 1s; two vertices are adjacent when their strings differ in
exactly one position.  It has fib(n+2) vertices.

Bit convention: a string is stored as a Python int whose bit i holds
position i+1, so the leftmost character x_1 is bit 0.  "No adjacent 1s"
is then ``bits & (bits >> 1) == 0``, and the canonical vertex order used
everywhere in this package is ascending numeric order of these ints.
"""

from dataclasses import dataclass
from functools import lru_cache


class CapacityError(ValueError):
    """Requested dimension exceeds the declared construction limit."""


#: Largest dimension build_cube will materialize explicitly.
MAX_DIMENSION = 30

_FIB = [0, 1]


def fib(n: int) -> int:
    """Fibonacci number with fib(0) = 0, fib(1) = 1; exact for any n >= 0."""
    if n < 0:
        raise ValueError(f"fib is defined for n >= 0, got {n}")
    while len(_FIB) <= n:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[n]


@dataclass(frozen=True, slots=True)
class Vertex:
    """A cube vertex: ``width`` bits with no two adjacent 1s set."""

    bits: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"negative width {self.width}")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits {self.bits:#x} do not fit in width {self.width}")
        if self.bits & (self.bits >> 1):
            raise ValueError(f"adjacent 1s in vertex {self.bits:#x}")

    def __str__(self) -> str:
        # leftmost character is bit 0
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.width))

    @classmethod
    def from_string(cls, s: str) -> "Vertex":
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
            elif c != "0":
                raise ValueError(f"bad vertex character {c!r} in {s!r}")
        return cls(bits, len(s))


@dataclass(frozen=True, slots=True)
class FibCube:
    """Explicit Fibonacci cube: dimension plus its full sorted vertex list."""

    n: int
    vertices: tuple[Vertex, ...]


@lru_cache(maxsize=8)
def vertex_bits(n: int) -> tuple[int, ...]:
    """Raw vertex list of the dimension-n Fibonacci cube, ascending ints.

    This is the fast path used by the pattern and packing machinery;
    build_cube wraps the same list in Vertex objects.
    """
    if n < 0:
        raise ValueError(f"dimension must be >= 0, got {n}")
    lower: tuple[int, ...] = (0,)  # dimension 0: the empty string
    cur: tuple[int, ...] = (0, 1)  # dimension 1
    if n == 0:
        return lower
    for dim in range(2, n + 1):
        high = 1 << (dim - 1)
        # a valid width-dim string either has bit dim-1 clear (any width-(dim-1)
        # string) or ends in "01" (any width-(dim-2) string plus the high bit);
        # the second block sorts entirely above the first.
        lower, cur = cur, cur + tuple(v | high for v in lower)
    return cur


def build_cube(n: int) -> FibCube:
    """Construct the dimension-n Fibonacci cube explicitly.

    The vertex list is every width-n bit vector with no adjacent 1s, in
    ascending numeric order; its length is fib(n+2).
    """
    if n < 0:
        raise ValueError(f"dimension must be >= 0, got {n}")
    if n > MAX_DIMENSION:
        raise CapacityError(f"dimension {n} exceeds MAX_DIMENSION={MAX_DIMENSION}")
    verts = tuple(Vertex(v, n) for v in vertex_bits(n))
    return FibCube(n, verts)


def adjacent(u: Vertex, v: Vertex) -> bool:
    """True iff u and v differ in exactly one position."""
    if u.width != v.width:
        raise ValueError(f"width mismatch: {u.width} vs {v.width}")
    return (u.bits ^ v.bits).bit_count() == 1
