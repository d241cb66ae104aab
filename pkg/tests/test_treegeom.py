import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import caterpillars
from oracles import caterpillar_distance as oracle_distance
from robcat.core import ElementOrder, FiniteMetric, SpaceError, parse_space
from robcat.treegeom import (
    Caterpillar,
    SFPCViolation,
    Violation,
    caterpillar_distance,
    caterpillar_from_json,
    caterpillar_from_metric,
    caterpillar_metric,
    caterpillar_to_dot,
    caterpillar_to_json,
    four_point_holds,
    gromov_product,
    sfpc_holds,
    sfpc_violation,
    verify_valid_drawing,
)

M4_ROWS = [[0, 3, 4, 6], [3, 0, 5, 7], [4, 5, 0, 4], [6, 7, 4, 0]]


@pytest.fixture
def m4():
    return FiniteMetric.from_rows(M4_ROWS)


def line(*xs):
    return FiniteMetric.from_rows([[abs(a - b) for b in xs] for a in xs])


def test_gromov_examples(m4):
    assert gromov_product(m4, 1, 2, 3) == 2
    assert gromov_product(m4, 2, 3, 4) == 1
    assert gromov_product(m4, 2, 2, 4) == 0


def test_four_point_examples(m4):
    assert four_point_holds(m4)
    assert four_point_holds(line(0, 1, 3))
    cycle = FiniteMetric.from_rows([[0, 2, 1, 1], [2, 0, 1, 1], [1, 1, 0, 2], [1, 1, 2, 0]])
    assert not four_point_holds(cycle)


def test_sfpc_examples(m4):
    assert sfpc_holds(m4, ElementOrder.identity(4))
    assert not sfpc_holds(m4, ElementOrder((1, 3, 2, 4)))
    assert sfpc_holds(line(0, 1, 3), ElementOrder.identity(3))
    quad, reason = sfpc_violation(m4, ElementOrder((1, 3, 2, 4)))
    assert quad == (1, 3, 2, 4) and reason


def test_from_metric_examples(m4):
    c = caterpillar_from_metric(m4, ElementOrder.identity(4))
    assert c.h == (0, 1, 3, 6) and c.l == (0, 2, 1, 0)
    c = caterpillar_from_metric(line(0, 1, 3))
    assert c.h == (0, 1, 3) and c.l == (0, 0, 0)
    c = caterpillar_from_metric(FiniteMetric.from_rows([[0, 3, 5], [3, 0, 4], [5, 4, 0]]))
    assert c.h == (0, 2, 5) and c.l == (0, 1, 0)


def test_from_metric_reports_quadruple(m4):
    with pytest.raises(SFPCViolation) as err:
        caterpillar_from_metric(m4, ElementOrder((1, 3, 2, 4)))
    assert err.value.quad == (1, 3, 2, 4)


def test_from_metric_respects_order(m4):
    order = ElementOrder((4, 3, 2, 1))
    c = caterpillar_from_metric(m4, order)
    # leaf k of the caterpillar is element order.perm[k-1]
    for a in range(1, 5):
        for b in range(1, 5):
            assert caterpillar_distance(c, a, b) == m4[order.perm[a - 1], order.perm[b - 1]]


def test_distance_examples():
    c = Caterpillar((0, 2, 5), (0, 1, 0))
    assert caterpillar_distance(c, 1, 2) == 3
    assert caterpillar_distance(c, 2, 2) == 0
    assert caterpillar_distance(c, 3, 1) == caterpillar_distance(c, 1, 3)
    c4 = Caterpillar((0, 1, 3, 6), (0, 2, 1, 0))
    assert caterpillar_distance(c4, 2, 4) == 7
    with pytest.raises(IndexError):
        caterpillar_distance(c4, 0, 1)


def test_metric_examples(m4):
    assert caterpillar_metric(Caterpillar((0, 1, 3, 6), (0, 2, 1, 0))).d == m4.d
    assert caterpillar_metric(Caterpillar((0, 5), (0, 0)))[1, 2] == 5
    with pytest.raises(SpaceError):
        caterpillar_metric(Caterpillar((0, 0), (0, 0)))


@pytest.mark.parametrize("h, l", [((1, 2), (0, 0)), ((0, 1), (1, 0)), ((0, 2, 1), (0, 0, 0)),
                                  ((0, 1), (0, -1)), ((0,), (0, 1))])
def test_caterpillar_invariants(h, l):
    with pytest.raises(SpaceError):
        Caterpillar(h, l)


def test_verify_valid_drawing_examples(e3):
    assert verify_valid_drawing(e3, line(0, 1, 3)) is True
    assert verify_valid_drawing(e3, line(0, 2, 3)) == Violation(2, 1, 3)
    metric_space = parse_space("3\n0 3 4\n3 0 5\n4 5 0")
    assert verify_valid_drawing(metric_space, FiniteMetric(metric_space.rho)) is True
    with pytest.raises(SpaceError):
        verify_valid_drawing(e3, line(0, 1))


@given(caterpillars(max_n=9))
def test_round_trip_and_conditions(cat):
    m = caterpillar_metric(cat)
    for i in range(1, cat.n + 1):
        for j in range(1, cat.n + 1):
            assert m[i, j] == oracle_distance(cat.h, cat.l, i, j)
    assert sfpc_holds(m, ElementOrder.identity(cat.n))
    assert four_point_holds(m)
    back = caterpillar_from_metric(m)
    assert caterpillar_metric(back).d == m.d
    if cat.l[-1] == 0:
        assert back == cat


@given(caterpillars(min_n=3), st.data())
def test_gromov_nonnegative(cat, data):
    m = caterpillar_metric(cat)
    idx = st.integers(1, cat.n)
    i, j, k = data.draw(idx), data.draw(idx), data.draw(idx)
    assert gromov_product(m, i, j, k) >= 0


@given(caterpillars())
def test_json_round_trip(cat):
    obj = json.loads(json.dumps(caterpillar_to_json(cat)))
    assert caterpillar_from_json(obj) == cat


def test_json_uses_ratio_strings():
    obj = caterpillar_to_json(Caterpillar((0, Fraction(3, 2)), (0, Fraction(1, 4))))
    assert obj == {"n": 2, "h": ["0", "3/2"], "l": ["0", "1/4"]}
    with pytest.raises(SpaceError):
        caterpillar_from_json({"n": 3, "h": ["0", "1"], "l": ["0", "0"]})


def test_dot_layout():
    dot = caterpillar_to_dot(Caterpillar((0, 1, 1, 3), (0, 0, 2, 0)))
    assert dot.startswith("graph caterpillar {")
    assert "rank=same; s1 [shape=point]; s2 [shape=point]; s3 [shape=point];" in dot
    assert 's1 -- s2 [label="1"' in dot and 's2 -- s3 [label="2"' in dot
    # leaves 2 and 3 share spine vertex s2
    assert 's2 -- leaf2 [label="0"]' in dot and 's2 -- leaf3 [label="2"]' in dot
    assert sum(line.strip().startswith("leaf") for line in dot.splitlines()) == 4
