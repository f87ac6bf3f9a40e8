from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from polarkron import gf2
from polarkron.errors import CapacityError, DimensionError
from polarkron.gf2 import BitMatrix

T5 = BitMatrix.from_rows(["10000", "01000", "01100", "11010", "00111"])
T2 = BitMatrix.from_rows(["10", "11"])


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return BitMatrix(tuple(rows), c)


def test_pack_roundtrip():
    assert gf2.pack([1, 0, 1, 1]) == 0b1101
    assert gf2.unpack(0b1101, 4) == (1, 0, 1, 1)


def test_from_rows_and_strings():
    assert T5.to_strings() == ["10000", "01000", "01100", "11010", "00111"]
    assert T5[3, 0] == 1 and T5[3, 2] == 0
    assert T2.column(0) == 0b11 and T2.column(1) == 0b10


def test_capacity_bound():
    with pytest.raises(CapacityError):
        BitMatrix.zeros(1, 65)
    with pytest.raises(CapacityError):
        gf2.kron(BitMatrix.identity(8), BitMatrix.identity(9))


@pytest.mark.parametrize(
    "m, expected",
    [(BitMatrix.identity(5), 5), (BitMatrix.zeros(3, 3), 0), (T5, 5)],
)
def test_rank_examples(m, expected):
    assert gf2.rank(m) == expected


def test_solve_t5_unit_vector():
    sol = gf2.solve(T5, (1, 0, 0, 0, 0))
    assert sol.particular is not None
    # support {1,4,5} in 1-based columns
    assert {c for c, b in enumerate(sol.particular) if b} == {0, 3, 4}
    assert sol.nullspace_basis == ()


def test_solve_identity():
    assert gf2.solve(BitMatrix.identity(4), (0, 1, 0, 0)).particular == (0, 1, 0, 0)


def test_solve_zero_matrix():
    sol = gf2.solve(BitMatrix.zeros(2, 2), (1, 0))
    assert sol.particular is None and not sol.consistent
    assert len(sol.nullspace_basis) == 2


def test_solve_length_mismatch():
    with pytest.raises(DimensionError):
        gf2.solve(T2, (1, 0, 0))


def test_kron_examples():
    assert gf2.kron(T2, T2).to_strings() == ["1000", "1100", "1010", "1111"]
    assert gf2.kron(BitMatrix.identity(2), BitMatrix.identity(2)) == BitMatrix.identity(4)
    t10 = gf2.kron(T2, T5)
    assert t10.shape == (10, 10)
    assert all(t10[r, c] == 0 for r in range(5) for c in range(5, 10))


def test_submatrix_rows():
    assert gf2.submatrix_rows(T5, 4).to_strings() == ["00111"]
    assert gf2.submatrix_rows(T5, 0) == T5
    assert gf2.submatrix_rows(T2, 1).to_strings() == ["11"]


def test_delete_row_col():
    assert gf2.delete_row_col(BitMatrix.identity(3), 0, 0) == BitMatrix.identity(2)
    g4 = gf2.kron(T2, T2)
    assert gf2.delete_row_col(g4, 3, 3).to_strings() == ["100", "110", "101"]


def test_in_span():
    assert gf2.in_span([0b011, 0b110], 0b101)
    assert not gf2.in_span([0b011, 0b110], 0b001)
    assert gf2.in_span([], 0)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_span_oracle(m):
    assert gf2.rank(m) == oracles.rank(list(m.rows))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_transpose(m):
    assert gf2.rank(m) == gf2.rank(gf2.transpose(m))


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4), matrices(4, 4))
def test_rank_of_kron(a, b):
    assert gf2.rank(gf2.kron(a, b)) == gf2.rank(a) * gf2.rank(b)


@settings(max_examples=100, deadline=None)
@given(matrices(3, 3), matrices(3, 3))
def test_kron_matches_numpy(a, b):
    expected = np.kron(np.array(a.to_lists()), np.array(b.to_lists())) % 2
    assert gf2.kron(a, b).to_lists() == expected.tolist()


@settings(max_examples=100, deadline=None)
@given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_kron_associative(a, b, c):
    assert gf2.kron(gf2.kron(a, b), c) == gf2.kron(a, gf2.kron(b, c))


@settings(max_examples=150, deadline=None)
@given(matrices(6, 6), st.data())
def test_solve_exhaustive(a, data):
    y = tuple(data.draw(st.lists(st.integers(0, 1), min_size=a.nrows, max_size=a.nrows)))
    sol = gf2.solve(a, y)
    solutions = {
        x for x in itertools.product((0, 1), repeat=a.ncols) if gf2.matvec(a, x) == y
    }
    if sol.particular is None:
        assert not solutions
        return
    base = gf2.pack(sol.particular)
    generated = {
        gf2.unpack(base ^ v, a.ncols)
        for v in oracles.span([gf2.pack(n) for n in sol.nullspace_basis])
    }
    # every generated vector solves the system and every solution is generated
    assert generated == solutions
