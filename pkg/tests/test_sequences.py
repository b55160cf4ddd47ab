"""Recurrence tables, the volume identity, coverage ratios, asymptotics.

These tests pin what the recurrences COMPUTE.  Whether those values are the
true packing numbers is a separate question answered by the exact solver.
See test_packing for the cells where the two provably part ways.
"""

from fractions import Fraction

import pytest

from fibcube import (
    ASYMPTOTICS,
    SequenceTable,
    check_identity,
    coverage_ratio,
    fib,
    fib_asymptotic_estimate,
    packing_from_uncovered,
    packing_sequence,
    uncovered_sequence,
)


def test_packing_rows():
    assert [packing_sequence(1, n) for n in range(9)] == [0, 1, 1, 2, 4, 6, 10, 17, 27]
    assert [packing_sequence(2, n) for n in range(11)] == [0, 0, 0, 1, 1, 2, 5, 7, 12, 22, 34]
    assert [packing_sequence(3, n) for n in range(10)] == [0, 0, 0, 0, 0, 1, 1, 2, 6, 8]
    assert [packing_sequence(4, n) for n in range(11)] == [0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 7]


def test_uncovered_rows():
    assert [uncovered_sequence(1, n) for n in range(10)] == [1, 0, 1, 1, 0, 1, 1, 0, 1, 1]
    assert [uncovered_sequence(2, n) for n in range(9)] == [1, 2, 3, 1, 4, 5, 1, 6, 7]
    assert [uncovered_sequence(3, n) for n in range(9)] == [1, 2, 3, 5, 8, 5, 13, 18, 7]


def test_uncovered_base_rows_constant_in_k():
    for k in range(2, 8):
        assert [uncovered_sequence(k, n) for n in range(3)] == [1, 2, 3]


def test_recurrence_step():
    # each table entry regenerates from the two entries the recurrences cite
    for k in range(2, 6):
        for n in range(3, 60):
            assert uncovered_sequence(k, n) == uncovered_sequence(k, n - 3) + 2 * uncovered_sequence(k - 1, n - 2)
            assert packing_sequence(k, n) == packing_sequence(k - 1, n - 2) + packing_sequence(k, n - 3)


def test_volume_identity():
    for k in range(1, 6):
        for n in range(0, 80):
            assert uncovered_sequence(k, n) + (1 << k) * packing_sequence(k, n) == fib(n + 2)


def test_check_identity():
    assert all(check_identity(k, n) for k in range(1, 5) for n in range(3, 40))
    with pytest.raises(ValueError):
        check_identity(1, 2)
    with pytest.raises(ValueError):
        check_identity(0, 5)


def test_two_paths_agree():
    for k in range(1, 6):
        for n in range(0, 50):
            assert packing_from_uncovered(k, n) == packing_sequence(k, n)


def test_domain_validation():
    with pytest.raises(ValueError):
        uncovered_sequence(0, 3)
    with pytest.raises(ValueError):
        packing_sequence(1, -1)


def test_sequence_table_direct():
    table = SequenceTable(3, 20)
    assert table.packing(2, 9) == 22
    assert table.uncovered(3, 8) == 7
    with pytest.raises(ValueError):
        table.packing(4, 5)
    with pytest.raises(ValueError):
        SequenceTable(0, 10)


def test_table_grows_on_demand():
    # module-level cache regrows geometrically past its seed size
    assert packing_sequence(6, 400) > 0
    assert uncovered_sequence(6, 400) + 64 * packing_sequence(6, 400) == fib(402)


def test_coverage_ratio_exact():
    unc, cov = coverage_ratio(2, 9)
    assert unc == Fraction(1, 89)
    assert cov == Fraction(88, 89)
    for k in range(1, 4):
        for n in range(0, 30):
            unc, cov = coverage_ratio(k, n)
            assert unc + cov == 1


def test_asymptotic_constants():
    assert ASYMPTOTICS.golden_ratio == pytest.approx((1 + 5**0.5) / 2, abs=1e-15)
    assert ASYMPTOTICS.leading == pytest.approx((3 + 5**0.5) / (2 * 5**0.5), abs=1e-15)


def test_asymptotic_estimate_converges():
    errors = [
        abs(fib_asymptotic_estimate(n) - fib(n + 2)) / fib(n + 2)
        for n in range(5, 31, 5)
    ]
    assert errors[-1] < 1e-6
    assert all(b < a for a, b in zip(errors, errors[1:]))
