"""Wildcard-pattern model of the hypercube subgraphs of a Fibonacci cube.

An induced k-dimensional hypercube inside the dimension-n Fibonacci cube is
modeled as a subcube of the ambient n-cube: a string over {0, 1, *} where the
k stars range freely.  Such a pattern stays inside the Fibonacci cube exactly
when no two adjacent positions are both live (star or 1), since that is what
keeps every completion free of adjacent 1s.  ``cross_check_induced`` validates
this model against a model-free subgraph search at small scale instead of
assuming it.

Masks follow the bit convention of ``core``: bit i is string position i+1.
"""

from dataclasses import dataclass
from itertools import combinations

from .core import Vertex, adjacent, vertex_bits


@dataclass(frozen=True, slots=True)
class SubcubePattern:
    """A {0,1,*} pattern: star positions, fixed-one positions, and width."""

    star_mask: int
    one_mask: int
    width: int

    @property
    def order(self) -> int:
        """Number of stars; the pattern spans a cube of this dimension."""
        return self.star_mask.bit_count()

    def __str__(self) -> str:
        out = []
        for i in range(self.width):
            if (self.star_mask >> i) & 1:
                out.append("*")
            elif (self.one_mask >> i) & 1:
                out.append("1")
            else:
                out.append("0")
        return "".join(out)

    @classmethod
    def from_string(cls, s: str) -> "SubcubePattern":
        star = one = 0
        for i, c in enumerate(s):
            if c == "*":
                star |= 1 << i
            elif c == "1":
                one |= 1 << i
            elif c != "0":
                raise ValueError(f"bad pattern character {c!r} in {s!r}")
        return cls(star, one, len(s))


def is_valid_pattern(p: SubcubePattern) -> bool:
    """True iff stars and ones are disjoint, in range, with no adjacent live positions."""
    if p.width < 0 or p.star_mask < 0 or p.one_mask < 0:
        return False
    live = p.star_mask | p.one_mask
    if live >= (1 << p.width):
        return False
    if p.star_mask & p.one_mask:
        return False
    return not live & (live >> 1)


def enumerate_patterns(n: int, k: int) -> list[SubcubePattern]:
    """All valid width-n patterns with exactly k stars.

    Ordered ascending by (star_mask, one_mask); deterministic.  Empty when no
    pattern fits (e.g. k > n or stars cannot avoid adjacency).
    """
    if n < 0 or k < 0:
        raise ValueError(f"need n >= 0 and k >= 0, got ({n}, {k})")
    found = []
    # live masks with no adjacent bits are exactly the cube's vertex masks
    for live in vertex_bits(n):
        positions = [i for i in range(n) if (live >> i) & 1]
        if len(positions) < k:
            continue
        for stars in combinations(positions, k):
            star_mask = 0
            for i in stars:
                star_mask |= 1 << i
            found.append((star_mask, live ^ star_mask))
    found.sort()
    return [SubcubePattern(star, one, n) for star, one in found]


def _expand(star_mask: int, one_mask: int) -> list[int]:
    """Raw vertex ints of a pattern, ascending."""
    out = []
    sub = star_mask
    while True:
        out.append(one_mask | sub)
        if sub == 0:
            break
        sub = (sub - 1) & star_mask
    out.reverse()
    return out


def pattern_vertices(p: SubcubePattern) -> list[Vertex]:
    """The 2**order vertices a pattern covers, sorted ascending."""
    if not is_valid_pattern(p):
        raise ValueError(f"invalid pattern {p!r}")
    bits = _expand(p.star_mask, p.one_mask)
    bits.sort()
    return [Vertex(b, p.width) for b in bits]


def _brute_force_cube_vertex_sets(n: int, k: int) -> set[frozenset[int]]:
    """Vertex sets of induced k-cube subgraphs, found without the pattern model.

    k = 0: single vertices; k = 1: edges; k = 2: induced 4-cycles (the only
    2-regular graph on 4 vertices).
    """
    verts = [Vertex(b, n) for b in vertex_bits(n)]
    if k == 0:
        return {frozenset((v.bits,)) for v in verts}
    if k == 1:
        return {
            frozenset((u.bits, v.bits))
            for u, v in combinations(verts, 2)
            if adjacent(u, v)
        }
    sets = set()
    for quad in combinations(verts, 4):
        degs = [sum(adjacent(u, v) for v in quad if v is not u) for u in quad]
        if degs == [2, 2, 2, 2]:
            sets.add(frozenset(v.bits for v in quad))
    return sets


def cross_check_induced(n: int, k: int) -> bool:
    """Compare the pattern model against a model-free induced-subgraph search.

    True iff the family of vertex sets produced by enumerate_patterns equals
    the family found by brute force.  Only supported at small scale.
    """
    if not 0 <= n <= 6 or not 0 <= k <= 2:
        raise ValueError(f"cross-check supports 0 <= n <= 6, 0 <= k <= 2, got ({n}, {k})")
    from_patterns = {
        frozenset(_expand(p.star_mask, p.one_mask)) for p in enumerate_patterns(n, k)
    }
    from_search = _brute_force_cube_vertex_sets(n, k)
    return from_patterns == from_search
