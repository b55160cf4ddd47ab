"""Vertex encoding, cube construction, Fibonacci numbers."""

import pytest

from fibcube import (
    MAX_DIMENSION,
    CapacityError,
    Vertex,
    adjacent,
    build_cube,
    fib,
    vertex_bits,
)


def test_fib_values():
    want = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    assert [fib(n) for n in range(len(want))] == want


def test_fib_large_exact():
    assert fib(90) == 2880067194370816120
    # arbitrary precision, no float drift
    assert fib(300) == 222232244629420445529739893461909967206666939096499764990979600


def test_fib_negative_rejected():
    with pytest.raises(ValueError):
        fib(-1)


def test_vertex_rejects_adjacent_ones():
    with pytest.raises(ValueError):
        Vertex(0b011, 3)
    with pytest.raises(ValueError):
        Vertex(0b110, 3)


def test_vertex_rejects_out_of_range_bits():
    with pytest.raises(ValueError):
        Vertex(0b1000, 3)


def test_vertex_string_roundtrip():
    # leftmost character is bit 0
    v = Vertex(0b0010101, 7)
    assert str(v) == "1010100"
    assert Vertex.from_string("1010100") == v


def test_vertex_string_all_lengths():
    for n in range(7):
        for bits in vertex_bits(n):
            v = Vertex(bits, n)
            assert Vertex.from_string(str(v)) == v


def test_vertex_count_is_fibonacci():
    for n in range(15):
        assert len(vertex_bits(n)) == fib(n + 2)


def test_vertex_bits_ascending_and_valid():
    for n in range(12):
        bits = vertex_bits(n)
        assert list(bits) == sorted(bits)
        assert all(b & (b >> 1) == 0 for b in bits)


def test_build_cube_3():
    cube = build_cube(3)
    assert cube.n == 3
    assert {str(v) for v in cube.vertices} == {"000", "100", "010", "001", "101"}
    # canonical order is ascending bit value, not string order
    assert [v.bits for v in cube.vertices] == [0b000, 0b001, 0b010, 0b100, 0b101]


def test_build_cube_0_and_1():
    assert len(build_cube(0).vertices) == 1
    assert [str(v) for v in build_cube(1).vertices] == ["0", "1"]


def test_adjacent_is_hamming_distance_one():
    cube = build_cube(4)
    for u in cube.vertices:
        for v in cube.vertices:
            want = (u.bits ^ v.bits).bit_count() == 1
            assert adjacent(u, v) == want


def test_adjacent_rejects_width_mismatch():
    with pytest.raises(ValueError):
        adjacent(Vertex(0, 3), Vertex(0, 4))


def test_capacity_ceiling():
    assert MAX_DIMENSION == 30
    with pytest.raises(CapacityError):
        build_cube(MAX_DIMENSION + 1)
    # CapacityError is a ValueError, so one except clause catches both
    assert issubclass(CapacityError, ValueError)
