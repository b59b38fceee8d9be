"""Symbolic polarization of degree-3 quadratic identities.

Substituting ``mu = rho + psi`` (symmetric plus skew part) into a twisted
associator-type identity gives a combination of words ``O(x_a, I(x_b, x_c))``
with outer and inner operations ``O, I`` in ``{psi, rho}``.  After using the
symmetry of ``rho`` and the skew-symmetry of ``psi`` every such word has a
unique canonical form with ``b < c``, so the free space of these identities
has the 12 coordinates below:

    0..2   psi(x_a, psi(x_b, x_c))   a = 1, 2, 3
    3..5   psi(x_a, rho(x_b, x_c))
    6..8   rho(x_a, psi(x_b, x_c))
    9..11  rho(x_a, rho(x_b, x_c))

A word with composite first argument, ``O(W, x_a)``, is rewritten to
``-psi(x_a, W)`` or ``rho(x_a, W)`` before it is placed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import (IdentityReport, MultTable, TriTensor, act, assoc_left, assoc_right,
                      is_zero, nested_left, polarize, tensor_sum)
from .exact_linalg import QMatrix, kernel_basis, qvec, rank, solve, span_contains, span_rank
from .sigma3 import (PERMS, GroupVector, group_product, lambda_value, named_vector, orbit,
                     rank_v, same_module)

PSI, RHO = "psi", "rho"
KINDS = ((PSI, PSI), (PSI, RHO), (RHO, PSI), (RHO, RHO))  # (outer, inner)


@dataclass(frozen=True)
class PolarTerm:
    outer: str
    inner: str
    slot: int  # 1-based index of the lone outer argument

    @property
    def inner_pair(self) -> tuple:
        return tuple(i for i in (1, 2, 3) if i != self.slot)

    @property
    def index(self) -> int:
        return KINDS.index((self.outer, self.inner)) * 3 + self.slot - 1

    def __str__(self) -> str:
        b, c = self.inner_pair
        return f"{self.outer}(x{self.slot}, {self.inner}(x{b},x{c}))"


TERMS = tuple(PolarTerm(o, i, a) for o, i in KINDS for a in (1, 2, 3))


def _sign(op: str) -> int:
    return -1 if op == PSI else 1


def canonical_word(outer: str, inner: str, first, second) -> tuple:
    """Canonical (term index, sign) of ``outer(first, second)`` where exactly
    one argument is a variable index and the other is ``(inner, b, c)``."""
    sgn = 1
    if isinstance(first, tuple):
        first, second = second, first
        sgn *= _sign(outer)
    _, b, c = second
    if b > c:
        b, c = c, b
        sgn *= _sign(inner)
    return PolarTerm(outer, inner, first).index, sgn


@dataclass(frozen=True)
class PolarVector:
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 12:
            raise ValueError("a polarized identity has 12 coordinates")
        object.__setattr__(self, "coeffs", qvec(self.coeffs))

    @classmethod
    def zero(cls) -> "PolarVector":
        return cls((0,) * 12)

    def __add__(self, other):
        return PolarVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return PolarVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k) -> "PolarVector":
        k = Fraction(k)
        return PolarVector(tuple(k * a for a in self.coeffs))

    def part(self, outer: str, inner: str) -> tuple:
        start = KINDS.index((outer, inner)) * 3
        return self.coeffs[start:start + 3]

    def support(self) -> tuple:
        return tuple(i for i, a in enumerate(self.coeffs) if a)

    def normalized(self) -> "PolarVector":
        """Scaled so the first nonzero coordinate is 1."""
        lead = next((a for a in self.coeffs if a), None)
        return self if lead is None else self.scale(1 / lead)

    def text(self) -> str:
        return format_relation(self.coeffs)

    def __str__(self) -> str:
        return self.text()


def format_relation(coeffs) -> str:
    """Stable text form, e.g. ``psi(x1, rho(x2,x3)) - rho(x2, psi(x1,x3)) = 0``."""
    parts = []
    for a, t in zip(coeffs, TERMS):
        if not a:
            continue
        mag = abs(a)
        body = str(t) if mag == 1 else f"{mag} {t}"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(("+ " if a > 0 else "- ") + body)
    return (" ".join(parts) if parts else "0") + " = 0"


def polar_expand(v: GroupVector, w: GroupVector) -> PolarVector:
    """Coordinates of ``A^L(rho+psi) o Phi_v - A^R(rho+psi) o Phi_w``."""
    out = [Fraction(0)] * 12
    for a, s in v.terms():
        x, y, z = s.images
        for o, i in KINDS:
            idx, sg = canonical_word(o, i, x, (i, y, z))
            out[idx] += sg * a
    for a, s in w.terms():
        x, y, z = s.images
        for o, i in KINDS:
            idx, sg = canonical_word(o, i, (i, x, y), z)
            out[idx] -= sg * a
    return PolarVector(tuple(out))


def family_matrix(v: GroupVector, w: GroupVector) -> QMatrix:
    """12x6 matrix whose column j expands the identity twisted by ``PERMS[j]``,
    i.e. ``polar_expand(s_j v, s_j w)``; its column space is everything the
    (v, w)-identity implies after polarization."""
    cols = []
    for s in PERMS:
        e = GroupVector.basis(s)
        cols.append(polar_expand(group_product(e, v), group_product(e, w)).coeffs)
    return QMatrix.from_columns(cols, rows=12)


def polar_matrix(family: str = "assoc_v") -> QMatrix:
    """``assoc_v``: 12x6, column j is ``polar_expand(s_j, s_j)``.
    ``vw_pair``: 12x12, columns ``polar_expand(s_j, 0)`` then ``polar_expand(0, s_j)``."""
    zero = GroupVector.zero()
    if family == "assoc_v":
        return family_matrix(named_vector("id"), named_vector("id"))
    if family == "vw_pair":
        cols = [polar_expand(GroupVector.basis(s), zero).coeffs for s in PERMS]
        cols += [polar_expand(zero, GroupVector.basis(s)).coeffs for s in PERMS]
        return QMatrix.from_columns(cols, rows=12)
    raise ValueError(f"unknown family {family!r}; expected 'assoc_v' or 'vw_pair'")


@dataclass(frozen=True)
class SparseRelation:
    image: PolarVector
    preimage: tuple  # coordinates in the column basis of the matrix

    def __str__(self) -> str:
        return self.image.text()


def sparse_relations(m: QMatrix, max_support: int) -> list:
    """Image vectors of ``m`` with inclusion-minimal support of size at most
    ``max_support``, one per support (they are unique up to scale there),
    normalized to leading coefficient 1, each with one preimage.

    Ordered by support size, then lexicographically by support.
    """
    if not 0 <= max_support <= m.rows:
        raise ValueError(f"max_support must lie in 0..{m.rows}")
    found = []
    for size in range(1, max_support + 1):
        for support in combinations(range(m.rows), size):
            outside = [i for i in range(m.rows) if i not in support]
            if outside:
                sub = QMatrix.from_rows([m.row(i) for i in outside], cols=m.cols)
                ker = kernel_basis(sub)
            else:
                ker = [tuple(1 if i == j else 0 for i in range(m.cols)) for j in range(m.cols)]
            images = [m.matvec(k) for k in ker]
            images = [u for u in images if any(u)]
            if not images or rank(QMatrix.from_rows(images)) != 1:
                continue
            u = images[0]
            if any(u[i] == 0 for i in support):
                continue
            lead = u[support[0]]
            u = tuple(x / lead for x in u)
            pre = solve(m, u)
            found.append(SparseRelation(PolarVector(u), pre))
    return found


# ---- instantiating the symbolic layer on concrete algebras -------------------

def term_tensor(term: PolarTerm, rho: MultTable, psi: MultTable) -> TriTensor:
    """The trilinear map ``(x1, x2, x3) -> outer(x_a, inner(x_b, x_c))``."""
    ops = {PSI: psi, RHO: rho}
    base = nested_left(ops[term.outer], ops[term.inner])  # (x, y, z) -> O(x, I(y, z))
    b, c = term.inner_pair
    perm = next(s for s in PERMS if s.images == (term.slot, b, c))
    return act(base, GroupVector.basis(perm))


def instantiate(p: PolarVector, rho: MultTable, psi: MultTable) -> TriTensor:
    tensors, coeffs = [], []
    for a, t in zip(p.coeffs, TERMS):
        if a:
            tensors.append(term_tensor(t, rho, psi))
            coeffs.append(a)
    if not tensors:
        return TriTensor.zero(rho.dim)
    return tensor_sum(tensors, coeffs)


def polarized_equivalence_check(mu: MultTable, v: GroupVector, w: GroupVector) -> IdentityReport:
    """Compare the symbolic expansion, evaluated on ``polarize(mu)``, with the
    direct tensor ``act(A^L, v) - act(A^R, w)``; holds iff they agree exactly."""
    rho, psi = polarize(mu)
    symbolic = instantiate(polar_expand(v, w), rho, psi)
    direct = act(assoc_left(mu), v) - act(assoc_right(mu), w)
    return is_zero(symbolic - direct, "polarized_equivalence")


def polar_text(v: GroupVector, w=None) -> str:
    return polar_expand(v, v if w is None else w).text()


# ---- named relations ---------------------------------------------------------

def relation(**terms) -> PolarVector:
    """Build a PolarVector from keyword names like ``psi_rho_1=1``."""
    out = [Fraction(0)] * 12
    for key, a in terms.items():
        o, i, slot = key.split("_")
        out[PolarTerm(o, i, int(slot)).index] += Fraction(a)
    return PolarVector(tuple(out))


# psi(x1, rho(x2,x3)) - rho(x2, psi(x1,x3)) - rho(x3, psi(x1,x2))
LEIBNIZ_PSI_RHO = relation(psi_rho_1=1, rho_psi_2=-1, rho_psi_3=-1)
# psi(x1, psi(x2,x3)) + psi(x2, psi(x3,x1)) + psi(x3, psi(x1,x2))
JACOBI = relation(psi_psi_1=1, psi_psi_2=-1, psi_psi_3=1)


def orbit_relations(p: PolarVector) -> list:
    """The relation ``p`` with its variables permuted in all six ways."""
    out = []
    for s in PERMS:
        q_ = [Fraction(0)] * 12
        for a, t in zip(p.coeffs, TERMS):
            if not a:
                continue
            # rename x_i -> x_{s(i)}
            x = s(t.slot)
            b, c = (s(i) for i in t.inner_pair)
            idx, sg = canonical_word(t.outer, t.inner, x, (t.inner, b, c))
            q_[idx] += sg * a
        out.append(PolarVector(tuple(q_)))
    return out


def relations_span(relations) -> list:
    vecs = []
    for p in relations:
        vecs.extend(r.coeffs for r in orbit_relations(p))
    return vecs


def implied_by(m: QMatrix, p: PolarVector) -> bool:
    """True iff ``p`` lies in the column space of the family matrix ``m``."""
    return span_contains([m.column(j) for j in range(m.cols)], p.coeffs)


# ---- the C(alpha) family -----------------------------------------------------

def gamma(alpha) -> Fraction:
    return Fraction(2, 3) * (2 * Fraction(alpha) - 1)


def gamma_relation(alpha) -> PolarVector:
    """``L(psi, rho) - gamma (psi(x1, psi(x2,x3)) - 2 psi(x3, psi(x1,x2)))``."""
    g = gamma(alpha)
    return LEIBNIZ_PSI_RHO - relation(psi_psi_1=g, psi_psi_3=-2 * g)


@dataclass(frozen=True)
class CFamilyReport:
    alpha: Fraction
    gamma: Fraction
    v: GroupVector
    twisted: GroupVector  # v1 * v(alpha)
    expansion: PolarVector
    psi_psi_part: tuple
    gamma_relation: PolarVector
    matches_gamma_relation: bool  # expansion is a nonzero multiple of gamma_relation
    matches_modulo_jacobi: bool
    gamma_relation_implied: bool
    leibniz_residual: PolarVector  # expansion minus its L(psi,rho) and Jacobi components
    equivalent_to_leibniz_law: bool  # the identity says exactly: psi Lie and L(psi,rho) = 0
    v1_rank: int
    lie_admissible: bool
    three_power_associative: bool
    in_weakly_associative_module: bool
    same_module_as_weakly_associative: bool
    rank: int

    def lines(self) -> list:
        yes = {True: "yes", False: "no"}
        return [
            f"alpha = {self.alpha}",
            f"gamma = 2/3 (2 alpha - 1) = {self.gamma}",
            f"v(alpha) = {self.v}   (rank {self.rank})",
            f"v1 * v(alpha) = {self.twisted}",
            f"polarized C(alpha) o Phi_v1: {self.expansion.text()}",
            f"psi-psi part: {', '.join(str(a) for a in self.psi_psi_part)}",
            f"gamma relation: {self.gamma_relation.text()}",
            f"expansion is a multiple of the gamma relation: {yes[self.matches_gamma_relation]}",
            f"expansion matches it modulo the Jacobi identity: {yes[self.matches_modulo_jacobi]}",
            f"gamma relation implied by C(alpha): {yes[self.gamma_relation_implied]}",
            f"residual after removing L(psi,rho) and Jacobi: {self.leibniz_residual.text()}",
            f"C(alpha) equivalent to Jacobi + L(psi,rho) = 0: {yes[self.equivalent_to_leibniz_law]}",
            f"rank of M_v1 = {self.v1_rank} (invertible: {yes[self.v1_rank == 6]})",
            f"Lie-admissible (V_Lad in F_v): {yes[self.lie_admissible]}",
            f"3-power-associative (V_3Pa in F_v): {yes[self.three_power_associative]}",
            f"v(alpha) in F(Id - t12 + c): {yes[self.in_weakly_associative_module]}",
            f"F(v(alpha)) = F(Id - t12 + c): {yes[self.same_module_as_weakly_associative]}",
        ]


def _proportional(p: PolarVector, q_: PolarVector):
    """``k`` with ``p == k q_`` (``k`` may be 0 only if ``p`` is 0), else None."""
    j = next((i for i, a in enumerate(q_.coeffs) if a), None)
    if j is None:
        return Fraction(0) if not any(p.coeffs) else None
    k = p.coeffs[j] / q_.coeffs[j]
    return k if p == q_.scale(k) else None


def _same_span(a: list, b: list) -> bool:
    r = span_rank(a + b)
    return r == span_rank(a) == span_rank(b)


def c_family_analysis(alpha) -> CFamilyReport:
    alpha = Fraction(alpha)
    v = named_vector("c_family", alpha=alpha)
    v1 = named_vector("v1_invertible")
    twisted = group_product(v1, v)
    exp = polar_expand(twisted, twisted)
    target = gamma_relation(alpha)
    scale = _proportional(exp, target)
    mod_jacobi = span_contains([target.coeffs, JACOBI.coeffs], exp.coeffs) and any(exp.coeffs)
    # L has psi_rho_1 coefficient 1 and Jacobi has psi_psi_2 coefficient -1
    k_l = exp.coeffs[TERMS.index(PolarTerm(PSI, RHO, 1))]
    k_j = -exp.coeffs[TERMS.index(PolarTerm(PSI, PSI, 2))]
    residual = exp - LEIBNIZ_PSI_RHO.scale(k_l) - JACOBI.scale(k_j)
    family = family_matrix(v, v)
    family_span = [family.column(j) for j in range(family.cols)]
    generators = [t.coeffs for t in orbit(v)]
    weakly = named_vector("weakly_assoc")
    return CFamilyReport(
        alpha=alpha,
        gamma=gamma(alpha),
        v=v,
        twisted=twisted,
        expansion=exp,
        psi_psi_part=exp.part(PSI, PSI),
        gamma_relation=target,
        matches_gamma_relation=scale is not None and scale != 0,
        matches_modulo_jacobi=mod_jacobi,
        gamma_relation_implied=implied_by(family, target),
        leibniz_residual=residual,
        equivalent_to_leibniz_law=_same_span(
            family_span, relations_span([LEIBNIZ_PSI_RHO, JACOBI])),
        v1_rank=rank_v(v1),
        lie_admissible=span_contains(generators, named_vector("V_Lad").coeffs),
        three_power_associative=span_contains(generators, named_vector("V_3Pa").coeffs),
        in_weakly_associative_module=span_contains([t.coeffs for t in orbit(weakly)], v.coeffs),
        same_module_as_weakly_associative=same_module(v, weakly),
        rank=rank_v(v),
    )


def lambda_of_c_family(alpha) -> Fraction:
    return lambda_value(named_vector("c_family", alpha=alpha))
