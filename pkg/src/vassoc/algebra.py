"""Finite-dimensional algebras given by structure constants.

A :class:`MultTable` holds a bilinear map ``mu(e_i, e_j) = sum_k c[i][j][k] e_k``
and a :class:`TriTensor` a trilinear map ``T(e_i, e_j, e_k) = sum_l d[i][j][k][l] e_l``.
All indices are 0-based.  Trilinear identities are checked coefficientwise;
a failing check carries the lexicographically first nonzero coefficient as
its witness.

Twisting a trilinear map by ``v = sum a_s s`` permutes its arguments:
``act(T, v)(x1, x2, x3) = sum a_s T(x_s(1), x_s(2), x_s(3))``.  This is a
right action: ``act(act(T, v), v1) == act(T, v1 * v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

from .sigma3 import T12, GroupVector, named_vector

ZERO = Fraction(0)


def _zero_vec(n: int) -> tuple:
    return (ZERO,) * n


def _axpy(acc: list, a: Fraction, x) -> None:
    for i, xi in enumerate(x):
        if xi:
            acc[i] += a * xi


@dataclass(frozen=True)
class MultTable:
    dim: int
    c: tuple

    def __post_init__(self):
        n = self.dim
        c = self.c
        if len(c) != n or any(len(row) != n or any(len(cell) != n for cell in row) for row in c):
            raise ValueError(f"structure constants do not match dimension {n}")
        object.__setattr__(self, "c", tuple(tuple(tuple(Fraction(x) for x in cell) for cell in row)
                                            for row in c))

    @classmethod
    def zero(cls, n: int) -> "MultTable":
        return cls(n, tuple(tuple(_zero_vec(n) for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_function(cls, n: int, f: Callable) -> "MultTable":
        return cls(n, tuple(tuple(tuple(f(i, j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_dict(cls, n: int, products: dict) -> "MultTable":
        """``products[(i, j)] = {k: coefficient}``; missing products are zero."""
        def cell(i, j):
            out = [ZERO] * n
            for k, a in products.get((i, j), {}).items():
                out[k] = Fraction(a)
            return out
        return cls.from_function(n, cell)

    def __call__(self, x, y) -> tuple:
        acc = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        _axpy(acc, xi * yj, self.c[i][j])
        return tuple(acc)

    def left_mul(self, i: int, y) -> tuple:
        """``mu(e_i, y)`` for a coordinate vector ``y``."""
        acc = [ZERO] * self.dim
        for m, ym in enumerate(y):
            if ym:
                _axpy(acc, ym, self.c[i][m])
        return tuple(acc)

    def right_mul(self, x, k: int) -> tuple:
        """``mu(x, e_k)`` for a coordinate vector ``x``."""
        acc = [ZERO] * self.dim
        for m, xm in enumerate(x):
            if xm:
                _axpy(acc, xm, self.c[m][k])
        return tuple(acc)

    def _combine(self, other: "MultTable", a, b) -> "MultTable":
        _check_dims(self, other)
        n = self.dim
        return MultTable.from_function(
            n, lambda i, j: tuple(a * x + b * y for x, y in zip(self.c[i][j], other.c[i][j])))

    def __add__(self, other: "MultTable") -> "MultTable":
        return self._combine(other, 1, 1)

    def __sub__(self, other: "MultTable") -> "MultTable":
        return self._combine(other, 1, -1)

    def scale(self, k) -> "MultTable":
        k = Fraction(k)
        return MultTable.from_function(self.dim, lambda i, j: tuple(k * x for x in self.c[i][j]))

    def opposite(self) -> "MultTable":
        return MultTable.from_function(self.dim, lambda i, j: self.c[j][i])

    def is_symmetric(self) -> bool:
        return all(self.c[i][j] == self.c[j][i] for i in range(self.dim) for j in range(self.dim))

    def is_skew(self) -> bool:
        n = self.dim
        return all(self.c[i][j] == tuple(-x for x in self.c[j][i]) for i in range(n) for j in range(n))

    def is_zero(self) -> bool:
        return not any(x for row in self.c for cell in row for x in cell)

    def coefficients(self) -> tuple:
        """Flat tuple in (i, j, k) order."""
        return tuple(x for row in self.c for cell in row for x in cell)

    @classmethod
    def from_coefficients(cls, n: int, flat) -> "MultTable":
        flat = list(flat)
        return cls.from_function(n, lambda i, j: flat[(i * n + j) * n:(i * n + j + 1) * n])


@dataclass(frozen=True)
class TriTensor:
    dim: int
    d: tuple

    @classmethod
    def from_function(cls, n: int, f: Callable) -> "TriTensor":
        return cls(n, tuple(tuple(tuple(tuple(f(i, j, k)) for k in range(n))
                                  for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "TriTensor":
        return cls.from_function(n, lambda i, j, k: _zero_vec(n))

    def __getitem__(self, ijk) -> tuple:
        i, j, k = ijk
        return self.d[i][j][k]

    def _combine(self, other: "TriTensor", a, b) -> "TriTensor":
        _check_dims(self, other)
        return TriTensor.from_function(
            self.dim,
            lambda i, j, k: tuple(a * x + b * y for x, y in zip(self.d[i][j][k], other.d[i][j][k])))

    def __add__(self, other: "TriTensor") -> "TriTensor":
        return self._combine(other, 1, 1)

    def __sub__(self, other: "TriTensor") -> "TriTensor":
        return self._combine(other, 1, -1)

    def __neg__(self) -> "TriTensor":
        return self.scale(-1)

    def scale(self, k) -> "TriTensor":
        k = Fraction(k)
        return TriTensor.from_function(self.dim, lambda i, j, k_: tuple(k * x for x in self.d[i][j][k_]))

    def coefficients(self) -> tuple:
        """Flat tuple in (i, j, k, l) order."""
        return tuple(x for a in self.d for b in a for cell in b for x in cell)

    def first_nonzero(self) -> Optional["Witness"]:
        n = self.dim
        for i, j, k in product(range(n), repeat=3):
            for l, x in enumerate(self.d[i][j][k]):
                if x:
                    return Witness((i, j, k, l), x)
        return None

    def is_zero(self) -> bool:
        return self.first_nonzero() is None


def tensor_sum(tensors, coeffs=None) -> TriTensor:
    tensors = list(tensors)
    coeffs = [Fraction(1)] * len(tensors) if coeffs is None else [Fraction(a) for a in coeffs]
    n = tensors[0].dim
    for t in tensors:
        _check_dims(tensors[0], t)

    def cell(i, j, k):
        acc = [ZERO] * n
        for a, t in zip(coeffs, tensors):
            if a:
                _axpy(acc, a, t.d[i][j][k])
        return acc
    return TriTensor.from_function(n, cell)


def _check_dims(a, b) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


@dataclass(frozen=True)
class Witness:
    indices: tuple  # (i, j, k, l) for trilinear maps, (i, j, k) for bilinear ones
    value: Fraction

    def __str__(self) -> str:
        *args, out = self.indices
        inputs = ", ".join(f"e{a + 1}" for a in args)
        return f"coefficient of e{out + 1} at ({inputs}) is {self.value}"


@dataclass(frozen=True)
class IdentityReport:
    name: str
    holds: bool
    witness: Optional[Witness] = None
    clause: Optional[str] = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a report holds exactly when it has no witness")

    def as_record(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "witness_indices": list(self.witness.indices) if self.witness else None,
            "witness_value": str(self.witness.value) if self.witness else None,
            "clause": self.clause,
        }


# ---- nested products and twisting ----------------------------------------

def nested_left(phi1: MultTable, phi2: MultTable) -> TriTensor:
    """``(x, y, z) -> phi1(x, phi2(y, z))``."""
    _check_dims(phi1, phi2)
    return TriTensor.from_function(phi1.dim, lambda i, j, k: phi1.left_mul(i, phi2.c[j][k]))


def nested_right(phi1: MultTable, phi2: MultTable) -> TriTensor:
    """``(x, y, z) -> phi1(phi2(x, y), z)``."""
    _check_dims(phi1, phi2)
    return TriTensor.from_function(phi1.dim, lambda i, j, k: phi1.right_mul(phi2.c[i][j], k))


def assoc_left(mu: MultTable) -> TriTensor:
    return nested_left(mu, mu)


def assoc_right(mu: MultTable) -> TriTensor:
    return nested_right(mu, mu)


def associator(mu: MultTable) -> TriTensor:
    """``mu(x, mu(y, z)) - mu(mu(x, y), z)``, computed directly."""
    n = mu.dim

    def cell(i, j, k):
        a = mu.left_mul(i, mu.c[j][k])
        b = mu.right_mul(mu.c[i][j], k)
        return tuple(x - y for x, y in zip(a, b))
    return TriTensor.from_function(n, cell)


def act(t: TriTensor, v: GroupVector) -> TriTensor:
    """Precompose ``t`` with the argument permutation of ``v``."""
    n = t.dim
    terms = [(a, s.images) for a, s in v.terms()]

    def cell(i, j, k):
        args = (i, j, k)
        acc = [ZERO] * n
        for a, im in terms:
            _axpy(acc, a, t.d[args[im[0] - 1]][args[im[1] - 1]][args[im[2] - 1]])
        return acc
    return TriTensor.from_function(n, cell)


def is_zero(t: TriTensor, name: str = "zero", clause: Optional[str] = None) -> IdentityReport:
    w = t.first_nonzero()
    return IdentityReport(name, w is None, w, clause if w is not None else None)


def all_zero(name: str, clauses) -> IdentityReport:
    """Report on several named tensors; the first failing clause decides the witness."""
    for clause, t in clauses:
        w = t.first_nonzero()
        if w is not None:
            return IdentityReport(name, False, w, clause)
    return IdentityReport(name, True)


def is_v_associative(mu: MultTable, v: GroupVector, name: str = "v-associative") -> IdentityReport:
    return is_zero(act(associator(mu), v), name)


def vw_tensor(mu: MultTable, v: GroupVector, w: GroupVector) -> TriTensor:
    return act(assoc_left(mu), v) - act(assoc_right(mu), w)


def is_vw_algebra(mu: MultTable, v: GroupVector, w: GroupVector, mode: str = "diff",
                  name: str = "(v,w)-algebra") -> IdentityReport:
    if mode == "diff":
        return is_zero(vw_tensor(mu, v, w), name)
    if mode == "pair":
        return all_zero(name, [("left", act(assoc_left(mu), v)),
                               ("right", act(assoc_right(mu), w))])
    raise ValueError(f"mode must be 'pair' or 'diff', not {mode!r}")


# ---- polarization ----------------------------------------------------------

def polarize(mu: MultTable) -> tuple:
    """Symmetric and skew halves ``(rho, psi)`` with ``mu = rho + psi``."""
    half = Fraction(1, 2)
    mt = mu.opposite()
    return (mu + mt).scale(half), (mu - mt).scale(half)


def depolarize(rho: MultTable, psi: MultTable) -> MultTable:
    if not rho.is_symmetric():
        raise ValueError("rho is not symmetric")
    if not psi.is_skew():
        raise ValueError("psi is not skew-symmetric")
    return rho + psi


def leibniz_map(m0: MultTable, phi: MultTable) -> TriTensor:
    """``phi(m0(x, y), z) - m0(x, phi(y, z)) - m0(phi(x, z), y)``.

    For commutative ``m0`` and skew ``phi`` this is the derivation defect
    ``psi(xy, z) - x psi(y, z) - y psi(x, z)``.
    """
    _check_dims(m0, phi)
    n = m0.dim

    def cell(i, j, k):
        a = phi.right_mul(m0.c[i][j], k)
        b = m0.left_mul(i, phi.c[j][k])
        c = m0.right_mul(phi.c[i][k], j)
        return tuple(x - y - z for x, y, z in zip(a, b, c))
    return TriTensor.from_function(n, cell)


CYCLIC = named_vector("cyclic")


def jacobiator(psi: MultTable) -> TriTensor:
    if not psi.is_skew():
        raise ValueError("the Jacobiator is only defined here for skew-symmetric maps")
    return act(nested_left(psi, psi), CYCLIC)


# ---- identity catalog ------------------------------------------------------

# (name, v) for single-vector identities
V_IDENTITIES = (
    ("associative", named_vector("id")),
    ("lie_admissible", named_vector("V_Lad")),
    ("three_power_associative", named_vector("V_3Pa")),
    ("power_assoc_supplement", named_vector("power_assoc_supplement")),
    ("pre_lie", named_vector("pre_lie")),
    ("g3", named_vector("g3")),
    ("g4", named_vector("g4")),
    ("cyclic", named_vector("cyclic")),
    ("weakly_associative", named_vector("weakly_assoc")),
    ("rank5", named_vector("rank5")),
)

IDV = named_vector("id")
# x(yz) - (xy)z - y(xz) = 0
LEIBNIZ_LEFT = (named_vector("pre_lie"), IDV)
# (xy)z - x(yz) - (xz)y = 0, written as x(yz) - (xy)z + (xz)y = 0
LEIBNIZ_RIGHT = (IDV, named_vector("g4"))
# the (Id - t23, Id) encoding taken literally with left = mu(x, mu(y, z))
LEIBNIZ_T23_LITERAL = (named_vector("g4"), IDV)


def is_commutative(mu: MultTable) -> IdentityReport:
    return _table_report("commutative", mu - mu.opposite())


def is_skew_report(mu: MultTable) -> IdentityReport:
    return _table_report("skew", mu + mu.opposite())


def _table_report(name: str, diff: MultTable) -> IdentityReport:
    n = diff.dim
    for i, j in product(range(n), repeat=2):
        for k, x in enumerate(diff.c[i][j]):
            if x:
                return IdentityReport(name, False, Witness((i, j, k), x))
    return IdentityReport(name, True)


def symmetric_leibniz(mu: MultTable) -> IdentityReport:
    return all_zero("symmetric_leibniz", [
        ("left", vw_tensor(mu, *LEIBNIZ_LEFT)),
        ("right", vw_tensor(mu, *LEIBNIZ_RIGHT)),
    ])


def classify(mu: MultTable) -> list:
    """Every catalog identity, evaluated independently, in a fixed order."""
    a = associator(mu)
    reports = [is_zero(act(a, v), name) for name, v in V_IDENTITIES]
    reports.append(is_zero(vw_tensor(mu, *LEIBNIZ_LEFT), "leibniz_left"))
    reports.append(is_zero(vw_tensor(mu, *LEIBNIZ_RIGHT), "leibniz_right"))
    reports.append(is_zero(vw_tensor(mu, *LEIBNIZ_T23_LITERAL), "leibniz_t23_literal"))
    reports.append(symmetric_leibniz(mu))
    reports.append(is_commutative(mu))
    reports.append(is_skew_report(mu))
    return reports


# ---- Poisson-type families ---------------------------------------------------

POISSON_KINDS = ("poisson", "nonassoc_poisson", "weakly_poisson",
                 "pseudo_poisson_rank5", "pseudo_poisson_leibniz")


def cyclic_law(rho: MultTable, psi: MultTable) -> TriTensor:
    """``psi(xy, z) + psi(yz, x) + psi(zx, y)`` with ``xy = rho(x, y)``."""
    return act(nested_right(psi, rho), CYCLIC)


def pseudo_leibniz_law(rho: MultTable, psi: MultTable) -> TriTensor:
    """``x psi(y, z) - psi(y, xz) - psi(xy, z)`` with ``xy = rho(x, y)``."""
    a = nested_left(rho, psi)
    b = act(nested_left(psi, rho), GroupVector.basis(T12))
    c = nested_right(psi, rho)
    return tensor_sum([a, b, c], [1, -1, -1])


def poisson_family_check(rho: MultTable, psi: MultTable, kind: str) -> IdentityReport:
    if not rho.is_symmetric():
        raise ValueError("rho is not symmetric")
    if not psi.is_skew():
        raise ValueError("psi is not skew-symmetric")
    if kind not in POISSON_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {POISSON_KINDS}")
    lie = ("psi_jacobi", lambda: jacobiator(psi))
    leib = ("leibniz", lambda: leibniz_map(rho, psi))
    clauses = {
        "poisson": [lie, ("rho_associative", lambda: associator(rho)), leib],
        "nonassoc_poisson": [lie, leib],
        "weakly_poisson": [lie, ("cyclic_law", lambda: cyclic_law(rho, psi))],
        "pseudo_poisson_rank5": [
            lie, ("leibniz_minus_reversed",
                  lambda: act(leibniz_map(rho, psi), named_vector("g3")))],
        "pseudo_poisson_leibniz": [
            ("rho_leibniz", lambda: vw_tensor(rho, *LEIBNIZ_LEFT)),
            ("pseudo_leibniz", lambda: pseudo_leibniz_law(rho, psi))],
    }[kind]
    for clause, make in clauses:
        w = make().first_nonzero()
        if w is not None:
            return IdentityReport(kind, False, w, clause)
    return IdentityReport(kind, True)
