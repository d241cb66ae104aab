"""Tree and caterpillar metrics: four-point checks, construction, drawing checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import DissimilaritySpace, ElementOrder, FiniteMetric, SpaceError, format_value

__all__ = [
    "Caterpillar",
    "Violation",
    "SFPCViolation",
    "gromov_product",
    "four_point_holds",
    "sfpc_violation",
    "sfpc_holds",
    "caterpillar_from_metric",
    "caterpillar_distance",
    "caterpillar_metric",
    "verify_valid_drawing",
    "drawing_violation",
    "caterpillar_to_json",
    "caterpillar_from_json",
    "caterpillar_to_dot",
]


@dataclass(frozen=True)
class Caterpillar:
    """Leaf ``i`` hangs from spine offset ``h[i]`` on a leg of length ``l[i]``.

    Sequences are stored 0-indexed; leaf labels are 1-indexed.
    """

    h: tuple[Fraction, ...]
    l: tuple[Fraction, ...]

    def __post_init__(self):
        h = tuple(Fraction(v) for v in self.h)
        l = tuple(Fraction(v) for v in self.l)
        if len(h) != len(l) or not h:
            raise SpaceError("h and l must be non-empty and of equal length")
        if h[0] != 0 or l[0] != 0:
            raise SpaceError("caterpillar must be normalized with h[1] = l[1] = 0")
        if any(b < a for a, b in zip(h, h[1:])):
            raise SpaceError("spine offsets h must be non-decreasing")
        if any(v < 0 for v in l):
            raise SpaceError("leg lengths must be non-negative")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "l", l)

    @property
    def n(self) -> int:
        return len(self.h)


class SFPCViolation(SpaceError):
    def __init__(self, quad: tuple[int, ...], reason: str):
        self.quad = quad
        super().__init__(f"strong four-point condition fails on {quad}: {reason}")


@dataclass(frozen=True)
class Violation:
    """``rho(x, y) < rho(x, z)`` but ``d(x, y) >= d(x, z)`` (1-indexed)."""

    x: int
    y: int
    z: int


def gromov_product(m: FiniteMetric, i: int, j: int, k: int) -> Fraction:
    """``(d(i,j) + d(j,k) - d(i,k)) / 2``: leg of ``j`` seen from ``i`` and ``k``."""
    return (m[i, j] + m[j, k] - m[i, k]) / 2


def _pair_sums(d, a, b, c, e):
    return (d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c])


def four_point_holds(m: FiniteMetric) -> bool:
    """Standard form: the two largest pairing sums of every quadruple are equal."""
    d = m.d
    for quad in itertools.combinations(range(m.n), 4):
        s = sorted(_pair_sums(d, *quad))
        if s[1] != s[2]:
            return False
    return True


def sfpc_violation(m: FiniteMetric, order: ElementOrder) -> Optional[tuple[tuple[int, ...], str]]:
    """First quadruple (in ``order`` positions, as elements) breaking the strong condition."""
    if order.n != m.n:
        raise SpaceError("order length does not match metric size")
    d = m.permuted(order).d
    for quad in itertools.combinations(range(m.n), 4):
        i, j, k, l = quad
        ends = d[i][j] + d[k][l]
        cross = d[i][k] + d[j][l]
        nested = d[i][l] + d[j][k]
        label = tuple(order.perm[q] for q in quad)
        if cross != nested:
            return label, f"d(i,k)+d(j,l) = {cross} != {nested} = d(i,l)+d(j,k)"
        if ends > cross:
            return label, f"d(i,j)+d(k,l) = {ends} > {cross}"
    return None


def sfpc_holds(m: FiniteMetric, order: ElementOrder) -> bool:
    # with cross == nested >= ends on every quadruple the four-point condition
    # is implied, but it is checked anyway as the definition asks
    return four_point_holds(m) and sfpc_violation(m, order) is None


def caterpillar_from_metric(m: FiniteMetric, order: Optional[ElementOrder] = None) -> Caterpillar:
    """Embed a metric satisfying the strong four-point condition in a caterpillar.

    Leaves are placed in ``order``. Legs are Gromov products against the two
    ends of the order; the spine offset is what remains of ``d(first, i)``.
    """
    order = order or ElementOrder.identity(m.n)
    bad = sfpc_violation(m, order)
    if bad is not None:
        raise SFPCViolation(*bad)
    mm = m.permuted(order)
    n = mm.n
    if n == 1:
        return Caterpillar((Fraction(0),), (Fraction(0),))
    legs = [Fraction(0)] * n
    for i in range(2, n):
        legs[i - 1] = gromov_product(mm, 1, i, n)
    h = [mm[1, i] - legs[i - 1] for i in range(1, n + 1)]
    assert all(v >= 0 for v in legs), "negative leg under SFPC"
    assert all(b >= a for a, b in zip(h, h[1:])), "decreasing spine under SFPC"
    cat = Caterpillar(tuple(h), tuple(legs))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert caterpillar_distance(cat, i, j) == mm[i, j], f"distance mismatch at ({i},{j})"
    return cat


def caterpillar_distance(c: Caterpillar, i: int, j: int) -> Fraction:
    if not (1 <= i <= c.n and 1 <= j <= c.n):
        raise IndexError(f"leaf index ({i},{j}) out of range 1..{c.n}")
    if i == j:
        return Fraction(0)
    if i > j:
        i, j = j, i
    return c.h[j - 1] - c.h[i - 1] + c.l[i - 1] + c.l[j - 1]


def caterpillar_metric(c: Caterpillar) -> FiniteMetric:
    n = c.n
    return FiniteMetric.from_rows(
        [[caterpillar_distance(c, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def drawing_violation(space: DissimilaritySpace, m: FiniteMetric) -> Optional[Violation]:
    if space.n != m.n:
        raise SpaceError(f"space has {space.n} elements, metric has {m.n}")
    r, d, n = space.rho, m.d, space.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if r[x][y] < r[x][z] and not d[x][y] < d[x][z]:
                    return Violation(x + 1, y + 1, z + 1)
    return None


def verify_valid_drawing(space: DissimilaritySpace, m: FiniteMetric) -> bool | Violation:
    """``True`` if ``m`` preserves every strict comparison of ``space``, else the first violation."""
    v = drawing_violation(space, m)
    return True if v is None else v


def caterpillar_to_json(c: Caterpillar) -> dict:
    return {"n": c.n, "h": [format_value(v) for v in c.h], "l": [format_value(v) for v in c.l]}


def caterpillar_from_json(obj: dict) -> Caterpillar:
    from .core import parse_value

    cat = Caterpillar(tuple(parse_value(str(v)) for v in obj["h"]),
                      tuple(parse_value(str(v)) for v in obj["l"]))
    if "n" in obj and obj["n"] != cat.n:
        raise SpaceError("caterpillar JSON: n does not match h/l length")
    return cat


def _spine_groups(c: Caterpillar) -> list[tuple[Fraction, list[int]]]:
    groups: list[tuple[Fraction, list[int]]] = []
    for leaf, off in enumerate(c.h, start=1):
        if groups and groups[-1][0] == off:
            groups[-1][1].append(leaf)
        else:
            groups.append((off, [leaf]))
    return groups


def caterpillar_to_dot(c: Caterpillar, labels: Optional[Sequence[str]] = None) -> str:
    """Graphviz source: spine ``s1..sk`` on one rank, legs down to the leaves."""
    labels = labels or [str(i) for i in range(1, c.n + 1)]
    groups = _spine_groups(c)
    out = ["graph caterpillar {", "  rankdir=LR;", "  node [shape=circle];"]
    spine = [f"s{k}" for k in range(1, len(groups) + 1)]
    out.append("  { rank=same; " + " ".join(f'{s} [shape=point];' for s in spine) + " }")
    for k in range(1, len(groups)):
        length = groups[k][0] - groups[k - 1][0]
        out.append(f'  {spine[k - 1]} -- {spine[k]} [label="{format_value(length)}", weight=10];')
    for k, (_, leaves) in enumerate(groups):
        for leaf in leaves:
            out.append(f'  leaf{leaf} [label="{labels[leaf - 1]}"];')
            out.append(f'  {spine[k]} -- leaf{leaf} [label="{format_value(c.l[leaf - 1])}"];')
    out.append("}")
    return "\n".join(out) + "\n"
