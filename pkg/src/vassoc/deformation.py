"""Truncated formal deformations of v-algebras and (v, w)-algebras.

A :class:`Jet` ``[phi_0, phi_1, ..., phi_N]`` stands for
``mu_t = phi_0 + t phi_1 + ... + t^N phi_N``.  Only the equations of orders
``0..N`` are checked: higher orders involve terms the jet does not store.

For (v, w)-deformations every order is read off the single identity
``A^L(mu_t) o Phi_v - A^R(mu_t) o Phi_w = 0`` with ``A^L = mu(x, mu(y, z))``
and ``A^R = mu(mu(x, y), z)``, so the right-nested bullet carries a minus
sign and is precomposed with ``Phi_w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

import sympy

from .algebra import (MultTable, TriTensor, act, is_zero, nested_left,
                      nested_right, tensor_sum)
from .exact_linalg import QMatrix, kernel_basis, solve
from .sigma3 import PERMS, V_LAD, GroupVector, mv_matrix


@dataclass(frozen=True)
class Jet:
    terms: tuple

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise ValueError("a jet needs at least the base multiplication")
        if any(t.dim != terms[0].dim for t in terms):
            raise ValueError("all jet terms must share one dimension")
        object.__setattr__(self, "terms", terms)

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    @property
    def dim(self) -> int:
        return self.terms[0].dim

    @classmethod
    def padded(cls, terms, order: int) -> "Jet":
        """Truncate or zero-pad ``terms`` to exactly ``order + 1`` entries."""
        terms = list(terms)[:order + 1]
        n = terms[0].dim
        terms += [MultTable.zero(n)] * (order + 1 - len(terms))
        return cls(tuple(terms))


def bullet(phi1: MultTable, phi2: MultTable, v: GroupVector) -> TriTensor:
    """``(phi1 o (Id x phi2) - phi1 o (phi2 x Id)) o Phi_v``."""
    return act(nested_left(phi1, phi2) - nested_right(phi1, phi2), v)


def bullet_L(phi1: MultTable, phi2: MultTable, v: GroupVector) -> TriTensor:
    return act(nested_left(phi1, phi2), v)


def bullet_R(phi1: MultTable, phi2: MultTable, w: GroupVector) -> TriTensor:
    return act(nested_right(phi1, phi2), w)


def delta2(v: GroupVector, m0: MultTable, phi: MultTable) -> TriTensor:
    return bullet(m0, phi, v) + bullet(phi, m0, v)


def hochschild_delta2(m0: MultTable, phi: MultTable) -> TriTensor:
    """``x phi(y, z) - phi(xy, z) + phi(x, yz) - phi(x, y) z`` with ``xy = m0(x, y)``."""
    n = m0.dim

    def cell(i, j, k):
        a = m0.left_mul(i, phi.c[j][k])
        b = phi.right_mul(m0.c[i][j], k)
        c = phi.left_mul(i, m0.c[j][k])
        d = m0.right_mul(phi.c[i][j], k)
        return tuple(p - q + r - s for p, q, r, s in zip(a, b, c, d))
    return TriTensor.from_function(n, cell)


def _order_sum(jet: Jet, k: int, term) -> TriTensor:
    return tensor_sum([term(jet.terms[i], jet.terms[k - i]) for i in range(k + 1)])


def verify_jet(jet: Jet, v: GroupVector) -> list:
    """One report per order ``k <= N`` on ``sum_{i+j=k} phi_i ._v phi_j``."""
    return [is_zero(_order_sum(jet, k, lambda a, b: bullet(a, b, v)), f"order {k}")
            for k in range(jet.order + 1)]


def verify_jet_vw(jet: Jet, v: GroupVector, w: GroupVector) -> list:
    def term(a, b):
        return bullet_L(a, b, v) - bullet_R(a, b, w)
    return [is_zero(_order_sum(jet, k, term), f"order {k}") for k in range(jet.order + 1)]


def _basis_table(n: int, idx: int) -> MultTable:
    flat = [0] * (n ** 3)
    flat[idx] = 1
    return MultTable.from_coefficients(n, flat)


def delta2_kernel(v: GroupVector, m0: MultTable) -> list:
    """Basis of ``{phi : delta2(v, m0, phi) = 0}``, as structure-constant tables.

    Unknowns are the ``n^3`` coefficients of ``phi``; each of the ``n^4``
    coefficients of ``delta2`` gives one homogeneous equation.
    """
    n = m0.dim
    columns = [delta2(v, m0, _basis_table(n, idx)).coefficients() for idx in range(n ** 3)]
    m = QMatrix.from_columns(columns, rows=n ** 4)
    return [MultTable.from_coefficients(n, x) for x in kernel_basis(m)]


def lemma1_solve(m0: MultTable) -> list:
    """All ``w`` with ``hochschild_delta2(m0, phi) o Phi_w = 0`` for every bilinear ``phi``.

    By linearity it suffices to range over the ``n^3`` elementary tables;
    each coefficient of each twisted coboundary is one equation in the six
    unknown coordinates of ``w``.
    """
    if m0.is_zero():
        raise ValueError("the base multiplication must be nonzero")
    if not m0.is_symmetric():
        raise ValueError("the base multiplication must be commutative")
    n = m0.dim
    rows = set()
    for idx in range(n ** 3):
        h = hochschild_delta2(m0, _basis_table(n, idx))
        twisted = [act(h, GroupVector.basis(s)).coefficients() for s in PERMS]
        for r in zip(*twisted):
            if any(r):
                rows.add(r)
    if not rows:
        return [GroupVector.basis(s) for s in PERMS]
    m = QMatrix.from_rows(sorted(rows), cols=6)
    return [GroupVector(x) for x in kernel_basis(m)]


def lie_admissibility_certificate(v: GroupVector) -> Optional[GroupVector]:
    """Some ``v1`` with ``v1 * v = V_Lad``, or ``None`` if ``V_Lad`` is not in the image."""
    x = solve(mv_matrix(v), V_LAD.coeffs)
    return None if x is None else GroupVector(x)


# ---- polynomial sampling harness --------------------------------------------
#
# Stand-in for an algebra of differentiable functions: polynomials in one
# variable with their exact product and derivative.  Nothing is truncated, so
# an identity checked on monomials x^a, x^b, x^c holds or fails exactly.

_X = sympy.Symbol("x")


def monomial(a: int) -> sympy.Poly:
    return sympy.Poly(_X ** a, _X, domain="QQ")


def poly_derivative(f: sympy.Poly) -> sympy.Poly:
    return f.diff(_X)


def f_dg(f: sympy.Poly, g: sympy.Poly) -> sympy.Poly:
    """The bilinear map ``(f, g) -> f g'``."""
    return f * poly_derivative(g)


def symmetric_part(phi):
    half = sympy.Rational(1, 2)
    return lambda f, g: (phi(f, g) + phi(g, f)) * half


def skew_part(phi):
    half = sympy.Rational(1, 2)
    return lambda f, g: (phi(f, g) - phi(g, f)) * half


def monomial_triples(max_degree: int):
    """``(a, b, c)`` with ``a + b + c < max_degree``."""
    return [t for t in product(range(max_degree), repeat=3) if sum(t) < max_degree]


def g3_symmetric_residual(phi, f, g, h) -> sympy.Poly:
    """``f rho(g, h) - h rho(f, g) - rho(fg, h) + rho(f, gh)`` with ``rho`` the
    symmetric part of ``phi``."""
    rho = symmetric_part(phi)
    return f * rho(g, h) - h * rho(f, g) - rho(f * g, h) + rho(f, g * h)


def jacobi_residual(bracket, f, g, h) -> sympy.Poly:
    return bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))


def harness_failures(residual, max_degree: int) -> list:
    """Monomial exponent triples where ``residual(f, g, h)`` is nonzero."""
    out = []
    for a, b, c in monomial_triples(max_degree):
        r = residual(monomial(a), monomial(b), monomial(c))
        if not r.is_zero:
            out.append(((a, b, c), r.as_expr()))
    return out

