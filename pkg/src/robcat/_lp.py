"""Exact phase-1 simplex over the rationals plus a floating-point front end.

``phase1`` decides ``{y >= 0 : M y = b}`` and returns either a feasible point
or a Farkas vector ``u`` with ``M^T u >= 0`` and ``b^T u < 0``.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linprog

log = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


def phase1(M: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
    """Bland's-rule phase-1 simplex on a dense rational tableau.

    Returns ``("feasible", y)`` or ``("infeasible", u)``.
    """
    p = len(b)
    q = len(M[0]) if p else 0
    if p == 0:
        return "feasible", [ZERO] * q
    sign = [(-ONE if Fraction(bi) < 0 else ONE) for bi in b]
    width = q + p + 1
    rows = []
    for r in range(p):
        row = [sign[r] * Fraction(v) for v in M[r]]
        art = [ZERO] * p
        art[r] = ONE
        rows.append(row + art + [sign[r] * Fraction(b[r])])
    # reduced costs of the phase-1 objective (sum of artificials), rhs holds -w
    obj = [ZERO] * width
    for r in range(p):
        for j in range(q):
            obj[j] -= rows[r][j]
        obj[-1] -= rows[r][-1]
    basis = [q + r for r in range(p)]

    while True:
        enter = next((j for j in range(q + p) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(p):
            a = rows[r][enter]
            if a > 0:
                ratio = rows[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        # phase-1 objective is bounded below by zero, so a pivot row always exists
        assert leave is not None, "unbounded phase-1 ray"
        prow = rows[leave]
        piv = prow[enter]
        if piv != 1:
            prow = [v / piv for v in prow]
            rows[leave] = prow
        nz = [j for j, v in enumerate(prow) if v]
        for r in range(p):
            if r == leave:
                continue
            f = rows[r][enter]
            if f:
                row = rows[r]
                for j in nz:
                    row[j] -= f * prow[j]
        f = obj[enter]
        for j in nz:
            obj[j] -= f * prow[j]
        basis[leave] = enter

    if obj[-1] == 0:
        y = [ZERO] * q
        for r, var in enumerate(basis):
            if var < q:
                y[var] = rows[r][-1]
        return "feasible", y
    # simplex multipliers: reduced cost of artificial r is 1 - pi_r
    u = [-(ONE - obj[q + r]) * sign[r] for r in range(p)]
    return "infeasible", u


def check_farkas(M, b, u) -> bool:
    p, q = len(b), (len(M[0]) if b else 0)
    for j in range(q):
        if sum((M[r][j] * u[r] for r in range(p)), ZERO) < 0:
            return False
    return sum((b[r] * u[r] for r in range(p)), ZERO) < 0


def rationalize(values, max_den: int = 10**6) -> list[Fraction]:
    return [Fraction(float(v)).limit_denominator(max_den) for v in values]


def float_lp(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, bounds=(0, None)) -> tuple[int, Optional[np.ndarray]]:
    """Run HiGHS; returns ``(status, x)`` with scipy's status codes."""
    try:
        res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, bounds=bounds, method="highs")
    except ValueError as e:  # malformed numerics; caller falls back to exact
        log.debug("linprog failed: %s", e)
        return 4, None
    return res.status, (res.x if res.status == 0 else None)


def solve_exact(M: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """A basic solution of ``M y = b`` (free variables zero) by Gauss-Jordan, or ``None``."""
    p = len(b)
    q = len(M[0]) if p else 0
    rows = [[Fraction(v) for v in M[r]] + [Fraction(b[r])] for r in range(p)]
    pivots = []
    r = 0
    for c in range(q):
        pr = next((k for k in range(r, p) if rows[k][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        nz = [j for j, v in enumerate(rows[r]) if v]
        for k in range(p):
            if k != r and rows[k][c]:
                f = rows[k][c]
                row = rows[k]
                for j in nz:
                    row[j] -= f * rows[r][j]
        pivots.append(c)
        r += 1
        if r == p:
            break
    if any(rows[k][-1] for k in range(r, p)):
        return None
    y = [ZERO] * q
    for k, c in enumerate(pivots):
        y[c] = rows[k][-1]
    return y
