"""Plain-text export of the general tree-drawing MILP (big-M four-point model).

Format, one item per line::

    # comments
    MODEL tree_valid_drawing
    PARAM epsilon = <rational>
    PARAM big_m = <rational>
    CONTINUOUS
      d_1_2 >= 0
      ...
    BINARY
      x1_1_2_3_4
      ...
    OBJECTIVE
      minimize: 0
    CONSTRAINTS
      <name>: <terms> <= <rhs>
      <name>: <terms> = <rhs>
    END

Terms are ``coef var`` joined by ``+``/``-``; coefficients of 1 are omitted.
Row names: ``vd_i_j_k`` (valid drawing), ``tri_a_b_c`` (triangle
``d_ac <= d_ab + d_bc``), ``fpc<s><a-d>_i_j_k_l`` (big-M four-point rows for
binary ``x<s>``) and ``one_i_j_k_l`` (the binaries of a quadruple sum to one).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .core import DissimilaritySpace, SpaceError, format_value, is_identity_compatible

__all__ = ["MilpConfig", "export_milp", "expected_counts"]


@dataclass(frozen=True)
class MilpConfig:
    epsilon: Fraction = Fraction(1)
    big_m: Optional[Fraction] = None
    # emit ``d_ij <= d_ik + eps`` instead of ``d_ij + eps <= d_ik``; the former
    # admits the all-zero metric, so it is kept only for literal comparisons
    relaxed_drawing_rows: bool = False

    def __post_init__(self):
        if Fraction(self.epsilon) <= 0:
            raise SpaceError("epsilon must be positive")
        if self.big_m is not None and Fraction(self.big_m) <= 0:
            raise SpaceError("big_m must be positive")

    def resolved_big_m(self, n: int) -> Fraction:
        # default scale: 1000 * n * largest rank of the strict mapping
        if self.big_m is not None:
            return Fraction(self.big_m)
        return Fraction(1000 * n * max(1, comb(n, 2)))


def _d(i: int, j: int) -> str:
    i, j = min(i, j), max(i, j)
    return f"d_{i}_{j}"


def _terms(coefs: dict[str, Fraction]) -> str:
    parts = []
    for var, c in coefs.items():
        if c == 0:
            continue
        mag = abs(c)
        body = var if mag == 1 else f"{format_value(mag)} {var}"
        parts.append(("- " if c < 0 else "+ ") + body)
    if not parts:
        return "0"
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _lin(*pairs) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for var, c in pairs:
        out[var] = out.get(var, Fraction(0)) + Fraction(c)
    return out


def export_milp(space: DissimilaritySpace, cfg: MilpConfig = MilpConfig()) -> str:
    if not is_identity_compatible(space):
        raise SpaceError("MILP export expects an identity-compatible space")
    n = space.n
    eps = Fraction(cfg.epsilon)
    big_m = cfg.resolved_big_m(n)
    quads = list(itertools.combinations(range(1, n + 1), 4))
    lines = [
        "# tree valid drawing feasibility model (big-M four-point condition)",
        "MODEL tree_valid_drawing",
        f"PARAM epsilon = {format_value(eps)}",
        f"PARAM big_m = {format_value(big_m)}",
        "CONTINUOUS",
    ]
    lines += [f"  {_d(i, j)} >= 0" for i, j in itertools.combinations(range(1, n + 1), 2)]
    lines.append("BINARY")
    lines += [f"  x{s}_{i}_{j}_{k}_{l}" for i, j, k, l in quads for s in (1, 2, 3)]
    lines += ["OBJECTIVE", "  minimize: 0", "CONSTRAINTS"]

    def row(name: str, coefs, sense: str, rhs) -> None:
        lines.append(f"  {name}: {_terms(coefs)} {sense} {format_value(Fraction(rhs))}")

    # valid drawing: rho(i,j) < rho(i,k)  =>  d_ij + eps <= d_ik, one row per comparison
    vd_rhs = eps if cfg.relaxed_drawing_rows else -eps
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) == 3 and space[i, j] < space[i, k]:
                    row(f"vd_{i}_{j}_{k}", _lin((_d(i, j), 1), (_d(i, k), -1)), "<=", vd_rhs)
    # triangle inequalities, each side of each triple once
    for tri in itertools.combinations(range(1, n + 1), 3):
        for a, b, c in ((tri[0], tri[1], tri[2]), (tri[1], tri[0], tri[2]), (tri[0], tri[2], tri[1])):
            # d_ac <= d_ab + d_bc
            row(f"tri_{a}_{b}_{c}", _lin((_d(a, c), 1), (_d(a, b), -1), (_d(b, c), -1)), "<=", 0)
    # four-point condition: binary s marks which pairing sum is the smallest
    for i, j, k, l in quads:
        tag = f"{i}_{j}_{k}_{l}"
        s_ij = ((_d(i, j), 1), (_d(k, l), 1))
        s_ik = ((_d(i, k), 1), (_d(j, l), 1))
        s_il = ((_d(i, l), 1), (_d(j, k), 1))
        neg = lambda ps: tuple((v, -c) for v, c in ps)  # noqa: E731
        blocks = {
            1: ((s_ik, s_il), (s_ij, s_ik), (s_ij, s_il)),
            2: ((s_ij, s_il), (s_ik, s_ij), (s_ik, s_il)),
            3: ((s_ij, s_ik), (s_il, s_ij), (s_il, s_ik)),
        }
        for s, (eq, le1, le2) in blocks.items():
            xv = f"x{s}_{tag}"
            # |eq0 - eq1| <= M (1 - x): two rows
            row(f"fpc{s}a_{tag}", _lin(*eq[0], *neg(eq[1]), (xv, big_m)), "<=", big_m)
            row(f"fpc{s}b_{tag}", _lin(*eq[1], *neg(eq[0]), (xv, big_m)), "<=", big_m)
            row(f"fpc{s}c_{tag}", _lin(*le1[0], *neg(le1[1]), (xv, big_m)), "<=", big_m)
            row(f"fpc{s}d_{tag}", _lin(*le2[0], *neg(le2[1]), (xv, big_m)), "<=", big_m)
        row(f"one_{tag}", _lin(*((f"x{s}_{tag}", 1) for s in (1, 2, 3))), "=", 1)
    lines.append("END")
    return "\n".join(lines) + "\n"


def expected_counts(n: int) -> dict[str, int]:
    """Closed-form sizes of the exported model (valid-drawing rows depend on the data)."""
    return {
        "continuous": comb(n, 2),
        "binary": 3 * comb(n, 4),
        "triangle_rows": 3 * comb(n, 3),
        "big_m_rows": 12 * comb(n, 4),
        "sum_to_one_rows": comb(n, 4),
    }
