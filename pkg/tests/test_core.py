import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import any_spaces, robinson_spaces
from oracles import compatible_by_triples, compatible_orders, rows_of
from robcat.core import (
    DissimilaritySpace,
    ElementOrder,
    FiniteMetric,
    ParseError,
    SpaceError,
    find_compatible_order,
    format_space,
    is_identity_compatible,
    is_strict,
    ordinal_matrix,
    parse_space,
    parse_value,
    permute,
)


def space3(r12, r13, r23):
    return DissimilaritySpace.from_pairs(3, {(1, 2): r12, (1, 3): r13, (2, 3): r23})


def test_parse_e3(e3):
    assert e3.n == 3
    assert (e3[1, 2], e3[1, 3], e3[2, 3]) == (1, 3, 2)
    assert all(isinstance(v, Fraction) for row in e3.rho for v in row)


def test_parse_two_elements():
    s = parse_space("2\n0 1\n1 0")
    assert s.n == 2 and s[1, 2] == 1


def test_parse_asymmetry_location():
    with pytest.raises(ParseError) as err:
        parse_space("2\n0 1\n2 0")
    assert (err.value.row, err.value.col) == (2, 1)
    assert "asymmetry at (2,1)" in str(err.value)


@pytest.mark.parametrize("text, fragment, loc", [
    ("3\n0 1 x\n1 0 2\nx 2 0", "syntax", (1, 3)),
    ("3\n0 1 3\n1 0 2", "dimension", (None, None)),
    ("3\n0 1\n1 0 2\n3 2 0", "dimension", (1, None)),
    ("2\n1 1\n1 0", "diagonal", (1, 1)),
    ("2\n0 0\n0 0", "non-positive", (1, 2)),
    ("2\n0 -1\n-1 0", "non-positive", (1, 2)),
    ("2\n0 1/0\n1/0 0", "syntax", (1, 2)),
    ("", "empty", (None, None)),
    ("two\n0 1\n1 0", "size", (1, None)),
])
def test_parse_errors(text, fragment, loc):
    with pytest.raises(ParseError) as err:
        parse_space(text)
    assert fragment in str(err.value)
    assert (err.value.row, err.value.col) == loc


def test_parse_comments_crlf_and_exact_decimals():
    s = parse_space("# header\r\n2  # size\r\n0 1.25\r\n\r\n5/4 0\r\n")
    assert s[1, 2] == Fraction(5, 4)


def test_parse_value_forms():
    assert parse_value("7") == 7
    assert parse_value("0.1") == Fraction(1, 10)
    assert parse_value("3/6") == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_value("1e3")


@given(robinson_spaces(fractional=True))
def test_format_parse_round_trip(space):
    assert parse_space(format_space(space)) == space


def test_identity_compatible_examples(e3):
    assert is_identity_compatible(e3)
    assert is_identity_compatible(parse_space("2\n0 4\n4 0"))
    assert not is_identity_compatible(space3(5, 2, 1))


def test_is_strict_examples(e3):
    assert is_strict(e3)
    assert not is_strict(space3(1, 2, 1))
    assert is_strict(parse_space("2\n0 4\n4 0"))


@given(any_spaces(max_n=7))
def test_compatibility_matches_triple_scan(space):
    assert is_identity_compatible(space) == compatible_by_triples(rows_of(space))


@given(robinson_spaces())
def test_reversal_keeps_compatibility(space):
    rev = permute(space, ElementOrder.identity(space.n).reversed())
    assert is_identity_compatible(rev)


def test_permute_examples(e3):
    assert permute(e3, ElementOrder.identity(3)) == e3
    r = permute(e3, ElementOrder((3, 2, 1)))
    assert (r[1, 2], r[2, 3], r[1, 3]) == (2, 1, 3)
    with pytest.raises(SpaceError):
        permute(e3, ElementOrder((1, 2)))


@given(any_spaces(), st.randoms())
def test_permute_inverse(space, rnd):
    perm = list(range(1, space.n + 1))
    rnd.shuffle(perm)
    order = ElementOrder(tuple(perm))
    assert permute(permute(space, order), order.inverse()) == space
    # index substitution rule
    moved = permute(space, order)
    for i, j in itertools.product(range(1, space.n + 1), repeat=2):
        assert moved[i, j] == space[perm[i - 1], perm[j - 1]]


def test_find_order_examples(e3):
    assert find_compatible_order(e3) == ElementOrder.identity(3)
    rev = permute(e3, ElementOrder((3, 2, 1)))
    found = find_compatible_order(rev)
    assert is_identity_compatible(permute(rev, found))
    odd = space3(5, 1, 5)
    found = find_compatible_order(odd)
    assert (found is None) == (not compatible_orders(rows_of(odd)))


@given(any_spaces(max_n=6))
def test_find_order_exhaustive(space):
    found = find_compatible_order(space)
    brute = compatible_orders(rows_of(space))
    assert (found is None) == (not brute)
    if found is not None:
        assert is_identity_compatible(permute(space, found))


def test_find_order_limit():
    big = DissimilaritySpace.from_rows([[abs(a - b) for b in range(11)] for a in range(11)])
    with pytest.raises(SpaceError):
        find_compatible_order(big)


def test_space_validation():
    with pytest.raises(SpaceError):
        DissimilaritySpace.from_rows([[0]])
    with pytest.raises(SpaceError):
        DissimilaritySpace.from_rows([[0, 1], [2, 0]])
    with pytest.raises(IndexError):
        parse_space("2\n0 1\n1 0")[0, 1]


def test_element_order_validation():
    with pytest.raises(SpaceError):
        ElementOrder((1, 1, 2))
    assert ElementOrder((2, 3, 1)).inverse() == ElementOrder((3, 1, 2))


def test_finite_metric_triangle():
    FiniteMetric.from_rows([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    with pytest.raises(SpaceError, match="triangle"):
        FiniteMetric.from_rows([[0, 1, 5], [1, 0, 1], [5, 1, 0]])


@given(any_spaces())
def test_ordinal_matrix_preserves_order(space):
    r = ordinal_matrix(space)
    n = space.n
    for a, b, c, d in itertools.product(range(n), repeat=4):
        assert (r[a, b] < r[c, d]) == (space.rho[a][b] < space.rho[c][d])
