"""Exact linear algebra over Fraction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bishops import linalg

small_int = st.integers(min_value=-6, max_value=6)


def square_matrices(size: int):
    return st.lists(
        st.lists(small_int, min_size=size, max_size=size),
        min_size=size, max_size=size)


def test_rank_basics():
    assert linalg.rank([]) == 0
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 2, 3], [4, 5, 6]]) == 2


def test_det_known_values():
    assert linalg.det([[Fraction(1)]]) == 1
    assert linalg.det([[1, 2], [3, 4]]) == -2
    assert linalg.det([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24
    assert linalg.det([[1, 2], [2, 4]]) == 0


def test_det_row_swap_flips_sign():
    assert linalg.det([[0, 1], [1, 0]]) == -1


def test_invert_singular_is_none():
    assert linalg.invert([[1, 2], [2, 4]]) is None


@settings(max_examples=150, deadline=None)
@given(square_matrices(3))
def test_invert_round_trip(rows):
    inverse = linalg.invert(rows)
    if inverse is None:
        assert linalg.det(rows) == 0
        return
    n = len(rows)
    product = [
        [sum(Fraction(rows[i][k]) * inverse[k][j] for k in range(n))
         for j in range(n)]
        for i in range(n)
    ]
    assert product == [[1 if i == j else 0 for j in range(n)]
                       for i in range(n)]


@settings(max_examples=150, deadline=None)
@given(square_matrices(3), st.lists(small_int, min_size=3, max_size=3))
def test_solve_agrees_with_substitution(rows, rhs):
    solution = linalg.solve(rows, rhs)
    if solution.status == linalg.UNIQUE:
        assert linalg.mat_vec(linalg.to_matrix(rows), solution.point) == [
            Fraction(v) for v in rhs]
    else:
        assert linalg.det(rows) == 0


def test_solve_inconsistent():
    solution = linalg.solve([[1, 1], [1, 1]], [0, 1])
    assert solution.status == linalg.INCONSISTENT
    assert solution.point is None


def test_solve_underdetermined():
    solution = linalg.solve([[1, 1], [2, 2]], [3, 6])
    assert solution.status == linalg.UNDERDETERMINED


def test_solve_rectangular_overdetermined():
    solution = linalg.solve([[1, 0], [0, 1], [1, 1]], [2, 3, 5])
    assert solution.status == linalg.UNIQUE
    assert solution.point == [2, 3]


def test_det_rejects_nonsquare():
    with pytest.raises(ValueError):
        linalg.det([[1, 2, 3], [4, 5, 6]])
