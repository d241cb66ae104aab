from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from robcat.core import DissimilaritySpace, parse_space

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE: dict = {}


def record(criterion, ok: bool, detail: str) -> None:
    """Remember one acceptance line; printed in the terminal summary."""
    ACCEPTANCE[str(criterion)] = (bool(ok), detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.split()[0]), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def e3():
    return parse_space((DATA / "e3.txt").read_text())


@pytest.fixture
def counter():
    return parse_space((DATA / "counterexample.txt").read_text())


@st.composite
def robinson_spaces(draw, min_n=2, max_n=7, ties=True, fractional=False):
    """Identity-compatible spaces grown from the diagonal outwards."""
    n = draw(st.integers(min_n, max_n))
    lo = 0 if ties else 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = draw(st.integers(1, 6))
    for g in range(2, n):
        for i in range(n - g):
            rows[i][i + g] = max(rows[i][i + g - 1], rows[i + 1][i + g]) + draw(st.integers(lo, 4))
    scale = draw(st.sampled_from([1, 2, 3, 7])) if fractional else 1
    from fractions import Fraction

    vals = {(i + 1, j + 1): Fraction(rows[i][j], scale) for i in range(n) for j in range(i + 1, n)}
    return DissimilaritySpace.from_pairs(n, vals)


@st.composite
def any_spaces(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    vals = {(i, j): draw(st.integers(1, 9)) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return DissimilaritySpace.from_pairs(n, vals)


@st.composite
def caterpillars(draw, min_n=2, max_n=9):
    from fractions import Fraction

    from robcat.treegeom import Caterpillar

    n = draw(st.integers(min_n, max_n))
    q = st.builds(Fraction, st.integers(0, 12), st.integers(1, 4))
    steps = [draw(q) for _ in range(n - 1)]
    # distinct leaves must not coincide: within a run of equal offsets only the first may have no leg
    legs = [Fraction(0)] + [draw(q) for _ in range(n - 1)]
    h = [Fraction(0)]
    for s in steps:
        h.append(h[-1] + s)
    for k in range(1, n):
        if h[k] == h[k - 1] and legs[k] == 0:
            legs[k] = Fraction(1)
    return Caterpillar(tuple(h), tuple(legs))
