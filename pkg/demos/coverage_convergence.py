#!/usr/bin/env python3
"""Coverage fractions marching to their limits, in exact arithmetic.

For fixed k the covered fraction of a maximum-by-table packing tends to 1
and the per-cube share q/F tends to 1/2^k.  Everything here is a Fraction;
the decimal columns are display only.
"""

from fractions import Fraction

from fibcube import coverage_ratio, fib, packing_sequence

K_VALUES = (1, 2, 3, 4)
N_VALUES = (6, 12, 18, 24, 30, 45, 60, 90)


def main() -> None:
    for k in K_VALUES:
        limit = Fraction(1, 1 << k)
        print(f"k = {k}   (q/F limit = {limit} = {float(limit):.6f})")
        print(f"  {'n':>3} {'uncovered':>14} {'q/F':>24} {'covered':>12}")
        for n in N_VALUES:
            unc, cov = coverage_ratio(k, n)
            share = Fraction(packing_sequence(k, n), fib(n + 2))
            print(
                f"  {n:>3} {float(unc):>14.3e} {str(share):>24} {float(cov):>12.9f}"
            )
        gap = abs(Fraction(packing_sequence(k, 90), fib(92)) - limit)
        print(f"  gap to limit at n=90: {float(gap):.3e}\n")


if __name__ == "__main__":
    main()
