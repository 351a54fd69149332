import pytest
from hypothesis import given, settings, strategies as st

from hopfcyc.linalg import (Matrix, NoSolution, Subspace, fmt, kernel, parse, quotient, rank, rref,
                            scalar, solve, span)

small = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return Matrix.from_rows([[draw(small) for _ in range(c)] for _ in range(r)])


def test_scalar_roundtrip():
    assert fmt(parse("6/-4")) == "-3/2"
    assert fmt(scalar(4)) == "4"
    assert parse(fmt(scalar(7) / 3)) == scalar(7) / 3
    with pytest.raises(ZeroDivisionError):
        parse("1/0")
    with pytest.raises(TypeError):
        parse(0.5)


def test_rref_examples():
    m, piv = rref(Matrix.identity(2))
    assert m.is_identity() and piv == [0, 1]
    m, piv = rref(Matrix.from_rows([[1, 2], [2, 4]]))
    assert m.to_rows() == [[1, 2], [0, 0]] and piv == [0]
    m, piv = rref(Matrix.zeros(3, 3))
    assert m.is_zero() and piv == []


def test_solve_examples():
    b = Matrix.from_rows([[3], [5]])
    assert solve(Matrix.identity(2), b) == b
    assert solve(Matrix.from_rows([[1, 1]]), Matrix.from_rows([[2]])).to_rows() == [[2], [0]]
    with pytest.raises(NoSolution):
        solve(Matrix.from_rows([[0]]), Matrix.from_rows([[1]]))


def test_kernel_examples():
    assert kernel(Matrix.identity(3)).dim == 0
    k = kernel(Matrix.from_rows([[1, 2], [2, 4]]))
    assert k.dim == 1 and k.contains({0: -2, 1: 1})
    assert k.basis_matrix().to_rows() == [[1, scalar(-1) / 2]]  # canonical RREF row
    assert kernel(Matrix.zeros(2, 3)).dim == 3


def test_quotient_examples():
    p, s = quotient(2, span([{0: 1, 1: -1}], 2))
    assert p.rows == 1 and (p @ s).is_identity()
    p, s = quotient(3, span([], 3))
    assert p.is_identity() and s.is_identity()
    p, s = quotient(2, span([{0: 1}, {1: 1}], 2))
    assert p.rows == 0


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    r, piv = rref(m)
    assert rref(r)[0] == r
    assert rank(m) == len(piv)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent(a, data):
    x = Matrix.from_rows([[data.draw(small)] for _ in range(a.cols)])
    b = a @ x
    assert a @ solve(a, b) == b


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_annihilated(m):
    k = kernel(m)
    assert k.dim == m.cols - rank(m)
    assert (m @ k.basis_matrix().transpose()).is_zero()


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=4, max_cols=6))
def test_quotient_section(m):
    rel = Subspace.span(m.row_dicts(), m.cols)
    p, s = quotient(m.cols, rel)
    assert (p @ s).is_identity()
    assert kernel(p) == rel
    sp = s @ p
    for j in range(m.cols):
        diff = {i: x for i, x in sp.col(j).items()}
        diff[j] = diff.get(j, 0) - 1
        assert rel.contains({i: x for i, x in diff.items() if x})
