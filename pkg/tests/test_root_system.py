# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurrigid.errors import (
    IndexOutOfRangeError,
    InvalidTypeError,
    NotARootError,
)
from schurrigid.root_system import (
    Root,
    SimpleType,
    build,
    cartan_matrix,
    pair,
    parse_type,
    positive_root_closure,
    reflect,
)


@pytest.mark.parametrize(
    "family, rank, count",
    [
        ("A", 1, 1),
        ("A", 2, 3),
        ("A", 3, 6),
        ("A", 4, 10),
        ("A", 5, 15),
        ("B", 2, 4),
        ("B", 3, 9),
        ("B", 4, 16),
        ("C", 2, 4),
        ("C", 3, 9),
        ("C", 4, 16),
        ("D", 4, 12),
        ("E", 6, 36),
        ("F", 4, 24),
        ("G", 2, 6),
    ],
)
def test_number_of_positive_roots(family, rank, count):
    rs = build(SimpleType(family, rank))
    assert rs.num_positive == count
    assert len(positive_root_closure(SimpleType(family, rank))) == count


def test_a2_positive_roots():
    rs = build(parse_type("A2"))
    assert rs.positive_roots == (Root((1, 0)), Root((0, 1)), Root((1, 1)))


@pytest.mark.parametrize("text", ["f4", "F4", " G2 "])
def test_parse_type(text):
    assert str(parse_type(text)) == text.strip().upper()


@pytest.mark.parametrize("text", ["X3", "A0", "B1", "G3", "F5", "E9", "4F"])
def test_parse_type_invalid(text):
    with pytest.raises(InvalidTypeError):
        parse_type(text)


def test_cartan_matrix_g2():
    assert cartan_matrix(SimpleType("G", 2)).tolist() == [[2, -1], [-3, 2]]


@pytest.mark.parametrize(
    "text, d",
    [
        ("A3", [1, 1, 1]),
        ("B3", [2, 2, 1]),
        ("C3", [1, 1, 2]),
        ("F4", [2, 2, 1, 1]),
        ("G2", [1, 3]),
    ],
)
def test_symmetrizer(text, d):
    assert build(parse_type(text)).d.tolist() == d


def test_cartan_matrix_is_read_only():
    rs = build(parse_type("A2"))
    with pytest.raises(ValueError):
        rs.cartan[0, 0] = 3


def test_simple_roots_come_first():
    rs = build(parse_type("F4"))
    for i in range(1, 5):
        assert rs.id_of(rs.simple_root(i)) == i - 1


@pytest.mark.parametrize(
    "text, highest",
    [
        ("A3", (1, 1, 1)),
        ("B3", (1, 2, 2)),
        ("C3", (2, 2, 1)),
        ("F4", (2, 3, 4, 2)),
        ("G2", (3, 2)),
    ],
)
def test_highest_root(text, highest):
    assert build(parse_type(text)).highest_root == Root(highest)


def test_pair_with_itself():
    rs = build(parse_type("A2"))
    a1 = rs.simple_root(1)
    assert pair(rs, a1, a1) == 2


def test_pair_is_linear_in_the_first_argument():
    rs = build(parse_type("A2"))
    assert pair(rs, Root((1, 1)), rs.simple_root(1)) == 1


def test_pair_g2():
    rs = build(parse_type("G2"))
    a1, a2 = rs.simple_root(1), rs.simple_root(2)
    assert pair(rs, a2, a1) == -3
    assert pair(rs, a1, a2) == -1


def test_pair_rejects_non_roots():
    rs = build(parse_type("A2"))
    with pytest.raises(NotARootError):
        pair(rs, Root((2, 1)), rs.simple_root(1))


def test_reflect_simple_root_in_itself():
    rs = build(parse_type("A2"))
    a1 = rs.simple_root(1)
    assert reflect(rs, a1, a1) == -a1


def test_reflect_a2():
    rs = build(parse_type("A2"))
    assert reflect(rs, rs.simple_root(2), rs.simple_root(1)) == Root((1, 1))


def test_reflect_g2():
    rs = build(parse_type("G2"))
    assert reflect(rs, rs.simple_root(2), rs.simple_root(1)) == Root((3, 1))


@pytest.mark.parametrize(
    "text, long_count", [("B3", 6), ("C3", 3), ("G2", 3), ("F4", 12)]
)
def test_long_positive_roots(text, long_count):
    rs = build(parse_type(text))
    assert sum(rs.is_long(r) for r in rs.positive_roots) == long_count


def test_is_long_simple_roots_b3():
    rs = build(parse_type("B3"))
    assert [rs.is_long(rs.simple_root(i)) for i in (1, 2, 3)] == [
        True,
        True,
        False,
    ]


@pytest.mark.parametrize(
    "coeffs, coroot", [((3, 2), (1, 2)), ((1, 1), (1, 3)), ((0, 1), (0, 1))]
)
def test_coroot_g2(coeffs, coroot):
    rs = build(parse_type("G2"))
    assert rs.coroot(Root(coeffs)) == coroot


def test_negative_ids():
    rs = build(parse_type("B3"))
    for i, r in enumerate(rs.roots):
        assert rs.root(rs.negate_id(i)) == -r
        assert rs.is_positive_id(i) == r.is_positive


def test_check_simple_index():
    rs = build(parse_type("A3"))
    with pytest.raises(IndexOutOfRangeError):
        rs.simple_root(4)
    with pytest.raises(IndexOutOfRangeError):
        rs.simple_root(0)


def test_root_str():
    assert str(Root((1, 2, 0))) == "a1+2a2"
    assert str(Root((0, -1, -1))) == "-a2-a3"


def test_root_support():
    assert Root((0, 1, 2)).support == frozenset({2, 3})


def test_neighbors_d4():
    rs = build(parse_type("D4"))
    assert rs.neighbors[2] == frozenset({1, 3, 4})
    assert rs.neighbors[4] == frozenset({2})


F4 = build(parse_type("F4"))


@given(
    st.integers(min_value=0, max_value=47),
    st.integers(min_value=0, max_value=47),
)
def test_reflection_is_an_involution(beta_id, alpha_id):
    beta, alpha = F4.root(beta_id), F4.root(alpha_id)
    assert reflect(F4, reflect(F4, beta, alpha), alpha) == beta


@given(
    st.integers(min_value=0, max_value=47),
    st.integers(min_value=0, max_value=47),
)
def test_reflection_preserves_the_root_set(beta_id, alpha_id):
    image = reflect(F4, F4.root(beta_id), F4.root(alpha_id))
    assert F4.norm(image) == F4.norm(F4.root(beta_id))
