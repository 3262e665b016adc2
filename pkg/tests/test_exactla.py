from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from extbound.exactla import (
    FieldMismatchError, FieldSpec, Matrix, column_space_basis,
    express_in_columns, hstack, inverse, kernel_basis, rank, rref, solve,
)

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
F101 = FieldSpec.prime(101)
Q = FieldSpec.rationals()


def test_fieldspec_validation():
    with pytest.raises(ValueError):
        FieldSpec.prime(4)
    with pytest.raises(ValueError):
        FieldSpec.prime(1)
    with pytest.raises(ValueError):
        FieldSpec.prime(2**31 + 11)
    assert FieldSpec.prime(2147483647).p == 2147483647  # largest 31-bit prime


def test_field_coerce_and_fmt():
    assert F5.coerce("-1") == 4
    assert F5.coerce(7) == 2
    assert Q.coerce("2/3") == Fraction(2, 3)
    assert Q.fmt(Fraction(-1, 2)) == "-1/2"
    assert F101.coerce("1/2") == F101.mul(1, F101.inv(2))


def test_rref_identity_f5():
    m = Matrix.identity(F5, 2)
    red, pivots, rk = rref(m)
    assert red == m and rk == 2 and pivots == (0, 1)


def test_rref_char2_cancellation():
    m = Matrix.from_rows(F2, [[1, 1], [1, 1]])
    red, _, rk = rref(m)
    assert red.to_rows() == [[1, 1], [0, 0]] and rk == 1


def test_rref_proportional_rows_rationals():
    m = Matrix.from_rows(Q, [[2, 4], [1, 2]])
    red, _, rk = rref(m)
    assert red.to_rows() == [[1, 2], [0, 0]] and rk == 1


def test_kernel_single_equation_f3():
    m = Matrix.from_rows(F3, [[1, 1]])
    assert kernel_basis(m) == [(2, 1)]  # free-variable-unit convention


def test_kernel_identity_empty():
    assert kernel_basis(Matrix.identity(F5, 3)) == []


def test_kernel_zero_matrix():
    basis = kernel_basis(Matrix.zeros(F5, 2, 3))
    assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_solve_identity():
    m = Matrix.identity(F5, 3)
    assert solve(m, (1, 2, 3)) == (1, 2, 3)


def test_solve_free_variable_zero():
    m = Matrix.from_rows(F2, [[1, 1]])
    assert solve(m, (1,)) == (1, 0)


def test_solve_inconsistent():
    m = Matrix.from_rows(F5, [[0]])
    assert solve(m, (1,)) is None


def test_mixed_field_error():
    a = Matrix.identity(F5, 2)
    b = Matrix.identity(F3, 2)
    with pytest.raises(FieldMismatchError):
        a @ b


def test_zero_dimension_matrices():
    a = Matrix.zeros(F5, 0, 3)
    b = Matrix.zeros(F5, 3, 2)
    assert (a @ b).rows == 0 and (a @ b).cols == 2
    assert rank(a) == 0
    assert kernel_basis(Matrix.zeros(F5, 0, 2)) == [(1, 0), (0, 1)]


def test_express_and_inverse():
    b = Matrix.from_rows(F5, [[1, 0], [1, 1], [0, 2]])
    target = Matrix.from_rows(F5, [[2, 0], [3, 1], [2, 2]])
    x = express_in_columns(b, target)
    assert (b @ x).entries == target.entries
    sq = Matrix.from_rows(F5, [[1, 2], [3, 4]])
    assert (sq @ inverse(sq)).entries == Matrix.identity(F5, 2).entries
    assert inverse(Matrix.from_rows(F5, [[1, 2], [2, 4]])) is None


def test_column_space_basis_spans():
    m = Matrix.from_rows(F3, [[1, 2, 0], [2, 1, 0], [0, 0, 0]])
    b = column_space_basis(m)
    assert b.cols == rank(m)
    assert express_in_columns(b, m) is not None


FIELDS = [F2, F5, F101, Q]


def matrices(max_dim=4):
    def build(draw):
        fld = draw(st.sampled_from(FIELDS))
        rows = draw(st.integers(0, max_dim))
        cols = draw(st.integers(0, max_dim))
        data = draw(st.lists(st.integers(-6, 6), min_size=rows * cols,
                             max_size=rows * cols))
        return Matrix(fld, rows, cols, tuple(fld.coerce(x) for x in data))
    return st.composite(build)()


@settings(deadline=None, max_examples=60)
@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(deadline=None, max_examples=60)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.cols


@settings(deadline=None, max_examples=60)
@given(matrices())
def test_rref_idempotent(m):
    once = rref(m).matrix
    assert rref(once).matrix == once


@settings(deadline=None, max_examples=60)
@given(matrices())
def test_kernel_vectors_annihilate(m):
    for vec in kernel_basis(m):
        assert all(x == 0 for x in m.apply(vec))


@settings(deadline=None, max_examples=60)
@given(matrices(), st.lists(st.integers(-6, 6), min_size=0, max_size=4))
def test_solve_consistency(m, raw):
    b = tuple(m.field.coerce(x) for x in (raw + [0] * m.rows)[:m.rows])
    x = solve(m, b)
    if x is not None:
        assert m.apply(x) == b
    else:
        aug = hstack([m, Matrix(m.field, m.rows, 1, b)])
        assert rank(aug) > rank(m)
