from fractions import Fraction

import pytest
from hypothesis import given

from conftest import robinson_spaces
from oracles import centers as brute_centers
from oracles import ranks, rows_of
from robcat.core import DissimilaritySpace, SpaceError, is_identity_compatible, is_strict
from robcat.strictify import center_matrix, left_center, pair_ranking, right_center, strict_mapping


def tied3():
    return DissimilaritySpace.from_pairs(3, {(1, 2): 1, (2, 3): 1, (1, 3): 2})


def test_pair_ranking_examples(e3):
    r = pair_ranking(tied3())
    assert (r[2, 3], r[1, 2], r[1, 3]) == (1, 2, 3)
    r = pair_ranking(e3)
    assert (r[1, 2], r[2, 3], r[1, 3]) == (1, 2, 3)
    assert pair_ranking(DissimilaritySpace.from_pairs(2, {(1, 2): 9}))[1, 2] == 1


def test_strict_mapping_examples(e3):
    s = strict_mapping(tied3())
    assert (s[2, 3], s[1, 2], s[1, 3]) == (1, 2, 3)
    assert strict_mapping(e3) == e3


def test_strict_mapping_rejects_incompatible():
    bad = DissimilaritySpace.from_pairs(3, {(1, 2): 5, (1, 3): 2, (2, 3): 1})
    with pytest.raises(SpaceError):
        strict_mapping(bad)


@given(robinson_spaces())
def test_ranking_is_permutation_and_matches_sort(space):
    r = pair_ranking(space)
    m = space.n * (space.n - 1) // 2
    assert sorted(r.rank.values()) == list(range(1, m + 1))
    assert dict(r.rank) == ranks(rows_of(space))


@given(robinson_spaces())
def test_strict_mapping_is_compatible_and_refines(space):
    s = strict_mapping(space)
    assert is_strict(s) and is_identity_compatible(s)
    pairs = list(space.pairs())
    # every strict comparison of the original survives
    for p in pairs:
        for q in pairs:
            if space[p] < space[q]:
                assert s[p] < s[q]
    assert strict_mapping(s) == s


def test_center_examples(e3):
    assert left_center(e3, 1, 3) == 2
    assert left_center(e3, 1, 2) == 1
    assert left_center(e3, 2, 2) == 2
    assert right_center(e3, 3, 1) == 3
    assert right_center(e3, 2, 1) == 2
    assert right_center(e3, 3, 3) == 3
    with pytest.raises(SpaceError):
        left_center(e3, 3, 1)
    with pytest.raises(SpaceError):
        right_center(e3, 1, 3)


def test_center_matrix_examples(e3):
    assert center_matrix(e3).c == ((1, 1, 2), (2, 2, 2), (3, 3, 3))
    assert center_matrix(e3).to_json() == {"centers": [[1, 1, 2], [2, 2, 2], [3, 3, 3]]}
    two = DissimilaritySpace.from_pairs(2, {(1, 2): Fraction(1, 3)})
    assert center_matrix(two).c == ((1, 1), (2, 2))


@given(robinson_spaces(max_n=9))
def test_center_matrix_matches_definition(space):
    cm = center_matrix(space)
    expect = brute_centers(rows_of(space))
    assert [list(r) for r in cm.c] == expect
    n = space.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                assert cm[i, j] == left_center(space, i, j)
                assert i <= cm[i, j] <= j - 1
            elif i > j:
                assert cm[i, j] == right_center(space, i, j)
                assert j + 1 <= cm[i, j] <= i
            else:
                assert cm[i, j] == i


@given(robinson_spaces(max_n=9))
def test_center_monotonicity(space):
    c = center_matrix(space).c
    n = space.n
    for i in range(n):
        assert all(c[i][j] <= c[i][j + 1] for j in range(n - 1))
    for j in range(n):
        assert all(c[i][j] <= c[i + 1][j] for i in range(n - 1))


@given(robinson_spaces(max_n=9))
def test_adjacent_centers_on_strict_spaces(space):
    cm = center_matrix(strict_mapping(space))
    for i, j in space.pairs():
        assert cm.lc(i, j) == cm.rc(j, i) - 1


def test_centers_need_compatibility():
    with pytest.raises(SpaceError):
        center_matrix(DissimilaritySpace.from_pairs(3, {(1, 2): 5, (1, 3): 2, (2, 3): 1}))
