from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from oracles import ORDER, PERM_IMAGES, group_mult
from strategies import group_vectors
from vassoc.exact_linalg import span_contains
from vassoc.sigma3 import (C, C2, CAYLEY, ID, PERMS, T12, T13, GroupVector, Perm,
                           VectorSyntaxError, compose, format_vector, group_product, inverse,
                           lambda_value, left_translate, mv_matrix, named_vector, orbit,
                           parse_vector, rank_v, registry_names, same_module, sign)

V_LAD = named_vector("V_Lad")
V_3PA = named_vector("V_3Pa")


def gv(*c):
    return GroupVector(tuple(c))


def test_canonical_order_and_c_convention():
    assert tuple(p.images for p in PERMS) == tuple(PERM_IMAGES[n] for n in ORDER)
    # Phi_c sends (X, Y, Z) to (Y, Z, X): the first slot receives x_{c(1)} = x_2
    assert C(1) == 2 and C(2) == 3 and C(3) == 1


def test_compose_examples():
    assert compose(ID, C) == C
    assert compose(T12, T12) == ID
    assert compose(T13, T12) == C
    assert compose(T12, T13) == C2


def test_sign_examples():
    assert [sign(s) for s in PERMS] == [1, -1, -1, -1, 1, 1]


def test_invalid_permutation_rejected():
    with pytest.raises(ValueError):
        Perm((1, 1, 2))


def test_cayley_table_is_a_group():
    for a, b, c in product(range(6), repeat=3):
        assert CAYLEY[CAYLEY[a][b]][c] == CAYLEY[a][CAYLEY[b][c]]
    for s in PERMS:
        assert compose(s, inverse(s)) == ID == compose(inverse(s), s)


def test_group_product_examples():
    assert group_product(V_LAD, V_LAD) == V_LAD * 6  # frozen: brute force over 36 pairs
    assert group_product(V_LAD, V_LAD).coeffs == tuple(group_mult(V_LAD.coeffs, V_LAD.coeffs))


def test_left_translate_examples():
    assert left_translate(T12, V_3PA) == V_3PA
    assert left_translate(T12, V_LAD) == -V_LAD


def test_orbit_examples():
    assert all(t.is_zero() for t in orbit(GroupVector.zero()))
    assert set(orbit(V_LAD)) == {V_LAD, -V_LAD}
    assert set(orbit(named_vector("cyclic"))) == {gv(1, 0, 0, 0, 1, 1), gv(0, 1, 1, 1, 0, 0)}


def test_mv_matrix_examples():
    assert mv_matrix(GroupVector.basis(ID)).to_rows() == [
        tuple(int(i == j) for j in range(6)) for i in range(6)]
    assert rank_v(named_vector("weakly_assoc")) == 4


def test_mv_matrix_last_entry_follows_group_law():
    # coefficient of c2 in c2 * v is the coefficient of id in v
    v = gv(*range(1, 7))
    assert mv_matrix(v)[5, 5] == v[ID] == 1


@pytest.mark.parametrize("name, expected", [
    ("V_Lad", 1), ("V_3Pa", 1), ("cyclic", 2), ("pre_lie", 3), ("g3", 3), ("g4", 3),
    ("weakly_assoc", 4), ("rank5", 5), ("fam_b", 3), ("id", 6), ("power_assoc_supplement", 3),
    ("v1_invertible", 6),
])
def test_rank_catalog(name, expected):
    assert rank_v(named_vector(name)) == expected


def test_named_vector_examples():
    assert named_vector("V_Lad") == gv(1, -1, -1, -1, 1, 1)
    assert named_vector("weakly_assoc") == gv(1, -1, 0, 0, 1, 0)
    assert named_vector("fam_a", a=2) == gv(1, 2, 0, -1, 0, -2)
    assert named_vector("c_family", alpha=Fraction(1, 2)) == gv(2, Fraction(3, 2), 1, 0, 1, Fraction(1, 2))
    with pytest.raises(KeyError):
        named_vector("nope")
    with pytest.raises(ValueError):
        named_vector("fam_a")
    assert "rank5" in registry_names()


def test_parse_vector():
    assert parse_vector("id - t12 + c") == named_vector("weakly_assoc")
    assert parse_vector("2id - t12 - t13 - t23 + c") == named_vector("rank5")
    assert parse_vector("1/3 id - t12 + 7/12*t13 + 1/4 c2") == named_vector("v1_invertible")
    assert parse_vector("V_Lad") == V_LAD
    assert parse_vector("fam_a", {"a": 2}) == named_vector("fam_a", a=2)
    assert parse_vector("id + 2 V_3Pa") == gv(3, 2, 2, 2, 2, 2)
    for bad in ["", "id t12", "id + bogus", "id + * c", "fam_a"]:
        with pytest.raises(VectorSyntaxError):
            parse_vector(bad)


@given(group_vectors)
def test_format_parse_round_trip(v):
    assert parse_vector(format_vector(v)) == v


@given(group_vectors, group_vectors)
def test_product_matches_oracle_and_mv_matrix(v1, v):
    expected = tuple(group_mult(v1.coeffs, v.coeffs))
    assert group_product(v1, v).coeffs == expected
    assert mv_matrix(v).matvec(v1.coeffs) == expected


@given(group_vectors)
def test_translation_is_an_action(v):
    for s1, s2 in product(PERMS, repeat=2):
        assert left_translate(s1, left_translate(s2, v)) == left_translate(compose(s1, s2), v)


@given(group_vectors)
def test_orbit_elements_generate_the_same_module(v):
    for t in orbit(v):
        if not t.is_zero():
            assert rank_v(t) == rank_v(v)
            assert same_module(t, v)


@given(group_vectors)
def test_lambda_eigenvector_law(v):
    a = v.coeffs
    assert mv_matrix(v).matvec(V_LAD.coeffs) == (V_LAD * (a[0] - a[1] - a[2] - a[3] + a[4] + a[5])).coeffs
    assert lambda_value(v) == a[0] - a[1] - a[2] - a[3] + a[4] + a[5]


@given(group_vectors)
def test_full_sum_is_absorbed(v):
    assert group_product(v, V_3PA) == V_3PA * sum(v.coeffs)


def test_rank_one_vectors_are_the_two_lines():
    for c in product((-1, 0, 1), repeat=6):
        v = gv(*c)
        if not v.is_zero() and rank_v(v) == 1:
            assert span_contains([V_LAD.coeffs], c) or span_contains([V_3PA.coeffs], c)


def test_pre_lie_products_stay_in_module():
    # every v1 * (id - t12) lies in the span of id - t12, t13 - c, t23 - c2
    v = named_vector("pre_lie")
    gens = [gv(1, -1, 0, 0, 0, 0).coeffs, gv(0, 0, 1, 0, -1, 0).coeffs, gv(0, 0, 0, 1, 0, -1).coeffs]
    for s in PERMS:
        assert span_contains(gens, group_product(GroupVector.basis(s), v).coeffs)


