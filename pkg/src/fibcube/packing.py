"""Exact maximum disjoint-subcube packing on Fibonacci cubes.

This is the ground-truth arbiter for the recurrence tables in ``sequences``:
it finds a maximum family of pairwise vertex-disjoint k-subcubes and proves
its optimality from the explicit cube alone, consulting nothing else.  Its
verdicts override the recurrences where the two disagree (they do disagree;
see the sequences module docstring for the verified cells).

Search design: depth-first branch and bound over the canonical candidate
list from ``enumerate_patterns``.  Each node picks the lowest-index vertex
that can still be covered and branches on every remaining candidate covering
it, in canonical order, plus one branch that marks the vertex permanently
uncovered (optimal packings genuinely leave vertices uncovered, so that
branch is essential).  The pruning bound is the volume bound
``size + remaining // 2**k``, with ``remaining`` counting only vertices some
remaining candidate can still cover; vertices no candidate can reach are
treated as uncovered immediately.  No randomization anywhere: witnesses are
reproducible.

Vertex sets are bitsets over the index space of the sorted vertex list, so
disjointness tests are single AND operations.  The k = 1 case has a fast
path: the cube is bipartite by parity of the number of 1s, and a maximum
matching found by augmenting paths replaces the generic search.
"""

import sys
import time
from dataclasses import dataclass

from .core import MAX_DIMENSION, CapacityError, FibCube, Vertex, fib, vertex_bits
from .subcubes import SubcubePattern, _expand, enumerate_patterns, is_valid_pattern


@dataclass(frozen=True, slots=True)
class SolverConfig:
    """Optional solver caps; both limits must be positive when present."""

    time_limit: float | None = None
    node_limit: int | None = None
    k1_fast_path: bool = True

    def __post_init__(self) -> None:
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")


@dataclass(frozen=True, slots=True)
class PackingResult:
    """An (optimal unless flagged otherwise) disjoint-subcube packing."""

    n: int
    k: int
    chosen: tuple[SubcubePattern, ...]
    covered_count: int
    uncovered: tuple[Vertex, ...]
    optimal: bool
    nodes_explored: int

    @property
    def size(self) -> int:
        return len(self.chosen)


def _candidate_masks(n: int, k: int) -> tuple[list[SubcubePattern], list[int]]:
    """Canonical candidates and their vertex-index bitsets."""
    verts = vertex_bits(n)
    index = {v: i for i, v in enumerate(verts)}
    patterns = enumerate_patterns(n, k)
    masks = []
    for p in patterns:
        m = 0
        for b in _expand(p.star_mask, p.one_mask):
            m |= 1 << index[b]
        masks.append(m)
    return patterns, masks


def _branch_and_bound(
    n: int, k: int, time_limit: float | None, node_limit: int | None
) -> tuple[list[int], bool, int]:
    """Run the search; returns (chosen candidate indices, proven optimal, nodes)."""
    verts = vertex_bits(n)
    total = len(verts)
    _, masks = _candidate_masks(n, k)
    active0 = list(enumerate(masks))
    union0 = 0
    for m in masks:
        union0 |= m
    root_bound = total >> k

    best_size = 0
    best_chosen: list[int] = []
    chosen: list[int] = []
    nodes = 0
    stopped = False  # a limit fired
    done = False  # incumbent met the root volume bound; nothing can beat it
    deadline = time.monotonic() + time_limit if time_limit is not None else None

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * total + 100))

    def dfs(cov: int, active: list[tuple[int, int]]) -> None:
        nonlocal best_size, best_chosen, nodes, stopped, done
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            stopped = True
            return
        if deadline is not None and nodes & 255 == 0 and time.monotonic() > deadline:
            stopped = True
            return
        size = len(chosen)
        if size > best_size:
            best_size = size
            best_chosen = chosen.copy()
            if best_size == root_bound:
                done = True
                return
        if not cov:
            return
        if size + (cov.bit_count() >> k) <= best_size:
            return
        vbit = cov & -cov  # lowest coverable vertex
        for idx, mask in active:
            if mask & vbit:
                # candidates overlapping this one drop out, which includes
                # every other candidate covering the branch vertex
                child_active = []
                child_union = 0
                for other in active:
                    if not other[1] & mask:
                        child_active.append(other)
                        child_union |= other[1]
                chosen.append(idx)
                dfs(cov & ~mask & child_union, child_active)
                chosen.pop()
                if stopped or done:
                    return
        # leave the vertex permanently uncovered
        child_active = []
        child_union = 0
        for other in active:
            if not other[1] & vbit:
                child_active.append(other)
                child_union |= other[1]
        dfs(cov & ~vbit & child_union, child_active)

    if root_bound > 0 and active0:
        dfs(((1 << total) - 1) & union0, active0)
    else:
        nodes = 1
    return best_chosen, not stopped, nodes


def _parity_split_matching(n: int) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching of the cube via augmenting paths on the parity split.

    Returns the matching size and the matched (even, odd) vertex-bit pairs.
    Deterministic: adjacency lists and scan order follow the canonical
    vertex order.
    """
    verts = vertex_bits(n)
    index = {v: i for i, v in enumerate(verts)}
    left = [v for v in verts if v.bit_count() % 2 == 0]
    right = [v for v in verts if v.bit_count() % 2 == 1]
    right_pos = {v: j for j, v in enumerate(right)}
    valid = index  # membership test
    adj: list[list[int]] = []
    for u in left:
        nbrs = []
        for b in range(n):
            w = u ^ (1 << b)
            if w in valid:
                nbrs.append(right_pos[w])
        nbrs.sort()
        adj.append(nbrs)

    nl, nr = len(left), len(right)
    inf = nl + nr + 1
    pair_l = [-1] * nl
    pair_r = [-1] * nr
    dist = [0] * nl

    def bfs() -> bool:
        queue = []
        for u in range(nl):
            if pair_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for r in adj[u]:
                w = pair_r[r]
                if w == -1:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for r in adj[u]:
            w = pair_r[r]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_l[u] = r
                pair_r[r] = u
                return True
        dist[u] = inf
        return False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * (nl + nr) + 100))
    size = 0
    while bfs():
        for u in range(nl):
            if pair_l[u] == -1 and dfs(u):
                size += 1
    pairs = [(left[u], right[r]) for u, r in enumerate(pair_l) if r != -1]
    return size, pairs


def matching_max(n: int) -> int:
    """Size of a maximum matching of the dimension-n cube."""
    if n < 0:
        raise ValueError(f"dimension must be >= 0, got {n}")
    if n > MAX_DIMENSION:
        raise CapacityError(f"dimension {n} exceeds MAX_DIMENSION={MAX_DIMENSION}")
    size, _ = _parity_split_matching(n)
    return size


def max_packing(n: int, k: int, config: SolverConfig | None = None) -> PackingResult:
    """Maximum vertex-disjoint packing of k-subcubes into the dimension-n cube.

    With no limit in force the result is provably maximum (``optimal`` true)
    with a deterministic witness; when a time or node limit expires the best
    packing found so far is returned with ``optimal`` false.
    """
    if k < 1:
        raise ValueError(f"subcube order must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"dimension must be >= 0, got {n}")
    if n > MAX_DIMENSION:
        raise CapacityError(f"dimension {n} exceeds MAX_DIMENSION={MAX_DIMENSION}")
    if config is None:
        config = SolverConfig()

    canonical = lambda p: (p.star_mask, p.one_mask)
    if k == 1 and config.k1_fast_path:
        _, pairs = _parity_split_matching(n)
        chosen = sorted(
            (SubcubePattern(u ^ w, u & w, n) for u, w in pairs), key=canonical
        )
        optimal = True
        nodes = 0
    else:
        patterns, _ = _candidate_masks(n, k)
        idxs, optimal, nodes = _branch_and_bound(
            n, k, config.time_limit, config.node_limit
        )
        chosen = sorted((patterns[i] for i in idxs), key=canonical)

    covered = set()
    for p in chosen:
        covered.update(_expand(p.star_mask, p.one_mask))
    uncovered = tuple(
        Vertex(b, n) for b in vertex_bits(n) if b not in covered
    )
    return PackingResult(
        n=n,
        k=k,
        chosen=tuple(chosen),
        covered_count=(1 << k) * len(chosen),
        uncovered=uncovered,
        optimal=optimal,
        nodes_explored=nodes,
    )


def verify_packing(cube: FibCube, result: PackingResult) -> bool:
    """Structurally verify a packing result against an explicit cube.

    Checks pattern validity and order, pairwise disjointness, containment in
    the cube, and that the uncovered list is exactly the sorted complement.
    Never consults the sequence tables.
    """
    if result.n != cube.n:
        return False
    cube_bits = [v.bits for v in cube.vertices]
    cube_set = set(cube_bits)
    seen: set[int] = set()
    for p in result.chosen:
        if p.width != cube.n or p.order != result.k or not is_valid_pattern(p):
            return False
        for b in _expand(p.star_mask, p.one_mask):
            if b not in cube_set or b in seen:
                return False
            seen.add(b)
    if result.covered_count != len(seen):
        return False
    if result.covered_count != (1 << result.k) * len(result.chosen):
        return False
    complement = sorted(cube_set - seen)
    got = [v.bits for v in result.uncovered]
    if got != complement:
        return False
    if any(v.width != cube.n for v in result.uncovered):
        return False
    return len(result.uncovered) == fib(cube.n + 2) - result.covered_count
