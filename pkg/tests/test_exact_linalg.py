from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from oracles import sympy_rank
from strategies import small_q
from vassoc.exact_linalg import (QMatrix, kernel_basis, q, qvec, rank, rref, solve, span_basis,
                                 span_contains, span_rank)
from vassoc.sigma3 import mv_matrix, named_vector, orbit


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small_q | st.just(Fraction(0)), min_size=c, max_size=c),
                           min_size=r, max_size=r).map(lambda rows: QMatrix.from_rows(rows, cols=c))))


def test_rationals_are_normalized():
    x = q(Fraction(6, -4))
    assert (x.numerator, x.denominator) == (-3, 2)
    assert qvec([1, "2/4"]) == (Fraction(1), Fraction(1, 2))


def test_rref_examples():
    ident = QMatrix.identity(3)
    assert rref(ident) == (ident, [0, 1, 2])
    zero = QMatrix.zeros(2, 2)
    assert rref(zero) == (zero, [])
    red, piv = rref(QMatrix.from_rows([[1, 2], [2, 4]]))
    assert red.to_rows() == [(1, 2), (0, 0)] and piv == [0]


def test_rank_examples():
    assert rank(QMatrix.identity(6)) == 6
    assert rank(QMatrix.zeros(3, 4)) == 0
    assert rank(mv_matrix(named_vector("V_Lad"))) == 1


def test_kernel_examples():
    assert kernel_basis(QMatrix.identity(4)) == []
    assert kernel_basis(QMatrix.zeros(2, 2)) == [(1, 0), (0, 1)]
    (k,) = kernel_basis(QMatrix.from_rows([[1, 2], [2, 4]]))
    assert k == (-2, 1)


def test_solve_examples():
    assert solve(QMatrix.identity(2), (1, 2)) == (1, 2)
    assert solve(QMatrix.zeros(2, 2), (1, 0)) is None
    assert solve(QMatrix.from_rows([[1, 1], [0, 1]]), (3, 2)) == (1, 2)


def test_span_examples():
    assert span_contains([(1, 0)], (0, 0))
    assert not span_contains([(1, 0)], (0, 1))
    assert span_contains([t.coeffs for t in orbit(named_vector("weakly_assoc"))],
                         named_vector("V_Lad").coeffs)
    assert span_contains([], (0, 0, 0))
    assert not span_contains([], (0, 1, 0))


def test_shape_is_validated():
    try:
        QMatrix(2, 2, (1, 2, 3))
    except ValueError:
        pass
    else:
        raise AssertionError("short entry list accepted")


@given(matrices())
def test_rref_idempotent(m):
    red, piv = rref(m)
    assert rref(red) == (red, piv)


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.cols
    for k in kernel_basis(m):
        assert not any(m.matvec(k))


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy_rank(m.to_rows())


@given(matrices(), st.data())
def test_solve_is_exact(m, data):
    b = data.draw(st.lists(small_q, min_size=m.rows, max_size=m.rows))
    x = solve(m, b)
    if x is None:
        assert sympy_rank(m.to_rows()) < sympy_rank([list(r) + [bi] for r, bi in zip(m.to_rows(), b)])
    else:
        assert m.matvec(x) == tuple(b)


@given(st.lists(st.lists(small_q, min_size=3, max_size=3), max_size=4),
       st.lists(small_q, min_size=3, max_size=3))
def test_span_contains_agrees_with_ranks(gens, u):
    expected = span_rank(gens) == span_rank(gens + [u])
    assert span_contains(gens, u) == expected
    assert span_rank(span_basis(gens)) == span_rank(gens) == len(span_basis(gens))
