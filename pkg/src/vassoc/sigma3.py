"""The symmetric group on three letters and its rational group algebra.

Permutations are stored in one-line form, ``images[i] = s(i + 1)``.  The
canonical basis order of the group algebra is ``(id, t12, t13, t23, c, c2)``
with ``c = [2, 3, 1]``, which makes the argument permutation of ``c`` send
``(X, Y, Z)`` to ``(Y, Z, X)``.

Products compose right to left: ``compose(s1, s2)(i) = s1(s2(i))``.

Note on the 6x6 matrix of the family ``(v, t12 v, t13 v, t23 v, c v, c2 v)``:
it is generated from the Cayley table below, never transcribed.  Its bottom
right entry (coefficient of ``c2`` in ``c2 v``) is the coefficient of ``id``
in ``v``; a commonly reproduced display of this matrix has the ``c2``
coefficient there instead, which contradicts the group law.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact_linalg import QMatrix, qvec, rank, span_rank

NAMES = ("id", "t12", "t13", "t23", "c", "c2")
PRETTY = ("Id", "τ12", "τ13", "τ23", "c", "c²")


@dataclass(frozen=True)
class Perm:
    images: tuple

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def index(self) -> int:
        return PERMS.index(self)

    @property
    def name(self) -> str:
        return NAMES[self.index]

    def __repr__(self) -> str:
        return f"Perm({self.name})"


PERMS = tuple(Perm(t) for t in ((1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)))
ID, T12, T13, T23, C, C2 = PERMS


def compose(s1: Perm, s2: Perm) -> Perm:
    return Perm(tuple(s1(s2(i)) for i in (1, 2, 3)))


def inverse(s: Perm) -> Perm:
    images = [0, 0, 0]
    for i in (1, 2, 3):
        images[s(i) - 1] = i
    return Perm(tuple(images))


def sign(s: Perm) -> Fraction:
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if s.images[i] > s.images[j])
    return Fraction(-1) ** inversions


# CAYLEY[i][j] = index of compose(PERMS[i], PERMS[j])
CAYLEY = tuple(tuple(compose(a, b).index for b in PERMS) for a in PERMS)


@dataclass(frozen=True)
class GroupVector:
    """An element of Q[S3]; ``coeffs`` follow the canonical basis order."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 6:
            raise ValueError("a group algebra element has 6 coefficients")
        object.__setattr__(self, "coeffs", qvec(self.coeffs))

    @classmethod
    def basis(cls, s: Perm) -> "GroupVector":
        return cls(tuple(1 if t == s else 0 for t in PERMS))

    @classmethod
    def zero(cls) -> "GroupVector":
        return cls((0,) * 6)

    def __getitem__(self, s) -> Fraction:
        return self.coeffs[s.index if isinstance(s, Perm) else s]

    def __add__(self, other: "GroupVector") -> "GroupVector":
        return GroupVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GroupVector") -> "GroupVector":
        return GroupVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupVector":
        return GroupVector(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, GroupVector):
            return group_product(self, other)
        k = Fraction(other)
        return GroupVector(tuple(k * a for a in self.coeffs))

    def __rmul__(self, k):
        return GroupVector(tuple(Fraction(k) * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self):
        """(coefficient, permutation) pairs with nonzero coefficient."""
        return [(a, s) for a, s in zip(self.coeffs, PERMS) if a]

    def __str__(self) -> str:
        return format_vector(self)


def group_product(v1: GroupVector, v2: GroupVector) -> GroupVector:
    out = [Fraction(0)] * 6
    for i, a in enumerate(v1.coeffs):
        if a:
            for j, b in enumerate(v2.coeffs):
                if b:
                    out[CAYLEY[i][j]] += a * b
    return GroupVector(tuple(out))


def left_translate(s: Perm, v: GroupVector) -> GroupVector:
    out = [Fraction(0)] * 6
    for j, a in enumerate(v.coeffs):
        out[CAYLEY[s.index][j]] += a
    return GroupVector(tuple(out))


def orbit(v: GroupVector) -> list:
    return [left_translate(s, v) for s in PERMS]


def mv_matrix(v: GroupVector) -> QMatrix:
    """Column j is ``PERMS[j] * v``, so ``mv_matrix(v) @ v1 == v1 * v``."""
    return QMatrix.from_columns([t.coeffs for t in orbit(v)], rows=6)


def rank_v(v: GroupVector) -> int:
    return rank(mv_matrix(v))


def module_span(v: GroupVector) -> list:
    return [t.coeffs for t in orbit(v)]


def same_module(v: GroupVector, w: GroupVector) -> bool:
    """True iff v and w generate the same left submodule of Q[S3]."""
    a, b = module_span(v), module_span(w)
    r = span_rank(a + b)
    return r == span_rank(a) == span_rank(b)


def lambda_value(v: GroupVector) -> Fraction:
    """Sum of signed coefficients: the eigenvalue of ``mv_matrix(v)`` on V_Lad."""
    return sum((sign(s) * a for a, s in zip(v.coeffs, PERMS)), Fraction(0))


# ---- named vectors -------------------------------------------------------

def _gv(*c) -> GroupVector:
    return GroupVector(tuple(c))


def _fam_a(a=None) -> GroupVector:
    if a is None:
        raise ValueError("fam_a needs parameter a")
    a = Fraction(a)
    return _gv(1, a, 0, -1, 0, -a)


def _c_family(alpha=None) -> GroupVector:
    if alpha is None:
        raise ValueError("c_family needs parameter alpha")
    alpha = Fraction(alpha)
    return _gv(2, 1 + alpha, 1, 0, 1, 1 - alpha)


_REGISTRY = {
    "V_Lad": lambda: _gv(1, -1, -1, -1, 1, 1),
    "V_3Pa": lambda: _gv(1, 1, 1, 1, 1, 1),
    "id": lambda: _gv(1, 0, 0, 0, 0, 0),
    "cyclic": lambda: _gv(1, 0, 0, 0, 1, 1),
    "pre_lie": lambda: _gv(1, -1, 0, 0, 0, 0),
    "g3": lambda: _gv(1, 0, -1, 0, 0, 0),
    "g4": lambda: _gv(1, 0, 0, -1, 0, 0),
    "weakly_assoc": lambda: _gv(1, -1, 0, 0, 1, 0),
    "power_assoc_supplement": lambda: _gv(1, 0, 0, 1, 0, 0),
    "rank5": lambda: _gv(2, -1, -1, -1, 1, 0),
    "fam_a": _fam_a,
    "fam_b": lambda: _gv(1, -1, 0, -2, 2, 0),
    "c_family": _c_family,
    "v1_invertible": lambda: _gv(Fraction(1, 3), -1, Fraction(7, 12), 0, 0, Fraction(1, 4)),
}

_PARAMS = {"fam_a": "a", "c_family": "alpha"}


def registry_names() -> list:
    return sorted(_REGISTRY)


def named_vector(name: str, **params) -> GroupVector:
    """Look up a vector by registry name; ``fam_a`` takes ``a=``, ``c_family``
    takes ``alpha=``."""
    try:
        make = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown vector name {name!r}; known: {', '.join(registry_names())}") from None
    wanted = _PARAMS.get(name)
    if wanted is None:
        return make()
    return make(params.get(wanted))


V_LAD = named_vector("V_Lad")
V_3PA = named_vector("V_3Pa")
IDV = GroupVector.basis(ID)


# ---- text syntax ---------------------------------------------------------

_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*)?)?([A-Za-z_][A-Za-z0-9_]*)\s*")
_BASIS_ALIASES = {"id": ID, "t12": T12, "t13": T13, "t23": T23, "c": C, "c2": C2}


class VectorSyntaxError(ValueError):
    pass


def parse_vector(text: str, params: Optional[dict] = None) -> GroupVector:
    """Parse ``"2id - t12 - t13 - t23 + c"``, ``"1/3 id + 7/12*t13"``,
    ``"V_Lad"`` or ``"fam_a"`` (with ``params={"a": 2}``)."""
    params = params or {}
    text = text.strip()
    if not text:
        raise VectorSyntaxError("empty vector expression")
    if text == "0":
        return GroupVector.zero()
    total = GroupVector.zero()
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise VectorSyntaxError(f"cannot parse vector expression at column {pos}: {text[pos:]!r}")
        sgn, coef, token = m.groups()
        if sgn is None and not first:
            raise VectorSyntaxError(f"missing '+' or '-' before {token!r} at column {m.start()}")
        k = Fraction(coef) if coef else Fraction(1)
        if sgn == "-":
            k = -k
        if token in _BASIS_ALIASES:
            term = GroupVector.basis(_BASIS_ALIASES[token])
        else:
            try:
                term = named_vector(token, **params)
            except (KeyError, ValueError) as exc:
                raise VectorSyntaxError(str(exc.args[0])) from None
        total = total + k * term
        pos = m.end()
        first = False
    return total


def format_vector(v: GroupVector) -> str:
    parts = []
    for a, name in zip(v.coeffs, NAMES):
        if not a:
            continue
        mag = abs(a)
        body = name if mag == 1 else f"{mag} {name}"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(("+ " if a > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"
