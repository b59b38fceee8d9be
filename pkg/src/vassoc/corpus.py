"""Small algebras used as worked examples and test fixtures."""

from __future__ import annotations

from fractions import Fraction

from .algebra import MultTable


def matrix_algebra(n: int = 2) -> MultTable:
    """Full matrix algebra M_n with basis E_11, E_12, ..., E_nn (row-major)."""
    dim = n * n

    def cell(a, b):
        i, j = divmod(a, n)
        k, l = divmod(b, n)
        out = [0] * dim
        if j == k:
            out[i * n + l] = 1
        return out
    return MultTable.from_function(dim, cell)


def truncated_polynomials(n: int) -> MultTable:
    """K[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    def cell(i, j):
        out = [0] * n
        if i + j < n:
            out[i + j] = 1
        return out
    return MultTable.from_function(n, cell)


def square_zero_line() -> MultTable:
    """Dimension 2, ``e1 e1 = e2`` and every other product zero."""
    return MultTable.from_dict(2, {(0, 0): {1: 1}})


def poisson_example(alpha, beta) -> tuple:
    """``(mu0, psi1)`` on a 2-dimensional space.

    mu0(e1, e1) = 2 beta e1, mu0(e1, e2) = mu0(e2, e1) = alpha e1 + beta e2,
    mu0(e2, e2) = 2 alpha e2, and psi1(e1, e2) = e2.
    """
    a, b = Fraction(alpha), Fraction(beta)
    mu0 = MultTable.from_dict(2, {
        (0, 0): {0: 2 * b},
        (0, 1): {0: a, 1: b},
        (1, 0): {0: a, 1: b},
        (1, 1): {1: 2 * a},
    })
    psi1 = MultTable.from_dict(2, {(0, 1): {1: 1}, (1, 0): {1: -1}})
    return mu0, psi1


def cross_product() -> MultTable:
    """so(3): e1 e2 = e3, e2 e3 = e1, e3 e1 = e2, skew."""
    return MultTable.from_dict(3, {
        (0, 1): {2: 1}, (1, 0): {2: -1},
        (1, 2): {0: 1}, (2, 1): {0: -1},
        (2, 0): {1: 1}, (0, 2): {1: -1},
    })


def affine_line_bracket() -> MultTable:
    """The 2-dimensional nonabelian Lie bracket [e1, e2] = e2."""
    return MultTable.from_dict(2, {(0, 1): {1: 1}, (1, 0): {1: -1}})


def leibniz_nonlie() -> MultTable:
    """A left Leibniz algebra that is neither Lie nor right Leibniz.

    Only nonzero product: e1 e2 = e2.  Left multiplication by e1 is a
    derivation and e2 annihilates from the left.
    """
    return MultTable.from_dict(2, {(0, 1): {1: 1}})
