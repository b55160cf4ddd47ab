#!/usr/bin/env python3
"""Exact solver vs recurrence tables on small cubes.

Solves every cell it can close quickly, prints both answers side by side,
and flags the cells where the proven optimum beats the table value.  At
(k=2, n=7) the full witness is printed together with the volume arithmetic
that makes 8 unbeatable, so the disagreement can be checked by hand.
"""

from fibcube import (
    build_cube,
    fib,
    max_packing,
    packing_sequence,
    pattern_vertices,
    uncovered_sequence,
    verify_packing,
)

GRID = [
    (1, range(0, 11)),
    (2, range(0, 10)),
    (3, range(0, 10)),
    (4, range(0, 11)),
]


def scoreboard() -> list[tuple[int, int]]:
    disagreements = []
    print(f"{'k':>2} {'n':>3} {'solver':>7} {'table':>6} {'unc':>4} {'unc(table)':>10}  verdict")
    for k, ns in GRID:
        for n in ns:
            result = max_packing(n, k)
            assert result.optimal
            assert verify_packing(build_cube(n), result)
            q, p = packing_sequence(k, n), uncovered_sequence(k, n)
            ok = result.size == q and len(result.uncovered) == p
            verdict = "agree" if ok else "TABLE REFUTED"
            if not ok:
                disagreements.append((k, n))
            print(
                f"{k:>2} {n:>3} {result.size:>7} {q:>6} "
                f"{len(result.uncovered):>4} {p:>10}  {verdict}"
            )
    return disagreements


def show_witness(n: int, k: int) -> None:
    result = max_packing(n, k)
    total = fib(n + 2)
    print(f"\nwitness at k={k}, n={n} ({total} vertices):")
    seen = set()
    for pat in result.chosen:
        vs = pattern_vertices(pat)
        assert not ({v.bits for v in vs} & seen)
        seen |= {v.bits for v in vs}
        print(f"  {pat}  covers  {', '.join(str(v) for v in vs)}")
    print(f"  uncovered: {', '.join(str(v) for v in result.uncovered)}")
    per_cube = 1 << k
    print(f"  {result.size} cubes x {per_cube} vertices = {result.size * per_cube} covered, checked disjoint")
    print(
        f"  one more cube would need {(result.size + 1) * per_cube} vertices, "
        f"the cube only has {total}: size {result.size} is optimal"
    )


def main() -> None:
    disagreements = scoreboard()
    print(f"\ncells where the tables are provably wrong: {disagreements}")
    show_witness(7, 2)


if __name__ == "__main__":
    main()
