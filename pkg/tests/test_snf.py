"""Smith 标准形测试"""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix

from algebra import SNF, invariant_factors, smith_normal_form


def _diagonal(d):
    return [int(d[i, i]) for i in range(min(d.shape))]


def _is_diagonal(d) -> bool:
    rows, cols = d.shape
    return all(d[i, j] == 0 for i in range(rows) for j in range(cols) if i != j)


def test_zero_matrix():
    d, u, v = smith_normal_form([[0]])
    assert _diagonal(d) == [0]
    assert abs(int(Matrix(u.tolist()).det())) == 1


def test_identity():
    d, _, _ = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert _diagonal(d) == [1, 1, 1]
    assert _is_diagonal(d)


def test_coprime_diagonal():
    d, u, v = smith_normal_form([[2, 0], [0, 3]])
    assert _diagonal(d) == [1, 6]
    assert (u.dot(np.array([[2, 0], [0, 3]], dtype=object)).dot(v) == d).all()


def test_rectangular():
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert invariant_factors([[6, 4]]) == [2]
    assert invariant_factors([[3], [6], [9]]) == [3]


def test_empty():
    d, u, v = smith_normal_form([])
    assert d.shape == (0, 0)


def test_class_interface():
    snf = SNF([[4, 0], [0, 6]])
    assert (snf.num_rows, snf.num_columns) == (2, 2)
    d, _, _ = snf.get_smith_normal_form()
    assert _diagonal(d) == [2, 12]


matrices = st.integers(1, 6).flatmap(
    lambda rows: st.integers(1, 6).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
)


@settings(max_examples=1000, deadline=None)
@given(matrices)
def test_smith_normal_form_properties(rows):
    m = np.array(rows, dtype=object)
    d, u, v = smith_normal_form(rows)

    assert (u.dot(m).dot(v) == d).all()
    assert _is_diagonal(d)

    diagonal = _diagonal(d)
    assert all(x >= 0 for x in diagonal)
    for a, b in zip(diagonal, diagonal[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0

    assert abs(int(Matrix(u.tolist()).det())) == 1
    assert abs(int(Matrix(v.tolist()).det())) == 1
