"""Caterpillar feasibility: the constraint system, its kernel form, and Gordan certificates.

Variables are ``x = (h_2..h_n, l_2..l_n)``; ``h_1 = l_1 = 0`` are eliminated.
Constraint rows are labelled by ordered pairs: ``(i, j)`` with ``i < j`` is the
left-center inequality of the pair, ``(j, i)`` the right-center one. Rows are
ordered by gap then by ``i``, upper pairs first, so the consecutive-pair block
comes first within each half.
"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import _lp
from .core import DissimilaritySpace, SpaceError, format_value, is_identity_compatible, is_strict
from .strictify import CenterMatrix, center_matrix, strict_mapping
from .treegeom import Caterpillar, caterpillar_metric, drawing_violation

log = logging.getLogger(__name__)

__all__ = [
    "RationalMatrix",
    "GordanOutcome",
    "ReducedSystem",
    "LpsResult",
    "Certificate",
    "pair_order",
    "variable_labels",
    "build_constraints",
    "partition_BN",
    "inverse_B_transposed",
    "matrix_Y",
    "eliminate_redundant",
    "solve_gordan",
    "verify_outcome",
    "solve_lps",
    "draw_in_caterpillar",
    "midpoint_condition",
    "single_nonredundant_condition",
    "outcome_to_json",
]

Pair = tuple[int, int]


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    """Exact matrix stored as integer numerators over one common denominator."""

    num: np.ndarray
    den: int = 1
    row_labels: tuple = ()
    col_labels: tuple = ()

    def __post_init__(self):
        num = np.asarray(self.num)
        if num.ndim != 2:
            num = num.reshape(len(self.row_labels), len(self.col_labels))
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        if self.row_labels and len(self.row_labels) != num.shape[0]:
            raise ValueError("row label count does not match rows")
        if self.col_labels and len(self.col_labels) != num.shape[1]:
            raise ValueError("column label count does not match columns")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "row_labels", tuple(self.row_labels) or tuple(range(num.shape[0])))
        object.__setattr__(self, "col_labels", tuple(self.col_labels) or tuple(range(num.shape[1])))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], row_labels=(), col_labels=()) -> "RationalMatrix":
        fr = [[Fraction(v) for v in row] for row in rows]
        ncols = len(fr[0]) if fr else len(col_labels)
        den = lcm(1, *(v.denominator for row in fr for v in row))
        num = np.array([[v.numerator * (den // v.denominator) for v in row] for row in fr], dtype=object)
        return cls(num.reshape(len(fr), ncols), den, row_labels, col_labels)

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def entry(self, r: int, c: int) -> Fraction:
        return Fraction(int(self.num[r, c]), self.den)

    def to_fractions(self) -> list[list[Fraction]]:
        return [[Fraction(int(v), self.den) for v in row] for row in self.num]

    def to_float(self) -> np.ndarray:
        return self.num.astype(float) / self.den

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(self.num.T.copy(), self.den, self.col_labels, self.row_labels)

    @cached_property
    def _row_pos(self) -> dict:
        return {lab: k for k, lab in enumerate(self.row_labels)}

    @cached_property
    def _col_pos(self) -> dict:
        return {lab: k for k, lab in enumerate(self.col_labels)}

    def row_index(self, label) -> int:
        return self._row_pos[label]

    def col_index(self, label) -> int:
        return self._col_pos[label]

    def column(self, label) -> list[Fraction]:
        c = self.col_index(label)
        return [Fraction(int(v), self.den) for v in self.num[:, c]]

    def select_columns(self, labels: Sequence) -> "RationalMatrix":
        idx = [self.col_index(lab) for lab in labels]
        return RationalMatrix(self.num[:, idx].reshape(self.shape[0], len(idx)), self.den,
                              self.row_labels, tuple(labels))

    def dot(self, vec: Sequence) -> list[Fraction]:
        """Exact matrix-vector product."""
        vec = [Fraction(v) for v in vec]
        if len(vec) != self.shape[1]:
            raise SpaceError(f"vector length {len(vec)} != {self.shape[1]} columns")
        out = []
        for row in self.num:
            s = Fraction(0)
            for a, v in zip(row, vec):
                if a and v:
                    s += int(a) * v
            out.append(s / self.den)
        return out

    def tdot(self, vec: Sequence) -> list[Fraction]:
        """Exact ``M^T v``."""
        return self.T.dot(vec)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        num = np.asarray(self.num, dtype=object) @ np.asarray(other.num, dtype=object)
        return RationalMatrix(num, self.den * other.den, self.row_labels, other.col_labels)

    def equals(self, other: "RationalMatrix") -> bool:
        if self.shape != other.shape:
            return False
        a = np.asarray(self.num, dtype=object) * other.den
        b = np.asarray(other.num, dtype=object) * self.den
        return bool((a == b).all())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [_label(c) for c in self.col_labels])
        for lab, row in zip(self.row_labels, self.num):
            w.writerow([_label(lab)] + [format_value(Fraction(int(v), self.den)) for v in row])
        return buf.getvalue()


def _label(lab) -> str:
    if isinstance(lab, tuple):
        return f"({lab[0]},{lab[1]})"
    return str(lab)


def pair_order(n: int) -> list[Pair]:
    """All ordered pairs: upper ``(i, j)`` by gap then ``i``, then lower ``(j, i)`` likewise."""
    upper = [(i, i + g) for g in range(1, n) for i in range(1, n - g + 1)]
    return upper + [(j, i) for i, j in upper]


def variable_labels(n: int) -> list[str]:
    return [f"h{k}" for k in range(2, n + 1)] + [f"l{k}" for k in range(2, n + 1)]


def _require_strict(space: DissimilaritySpace) -> None:
    if not is_identity_compatible(space):
        raise SpaceError("space must be identity-compatible")
    if not is_strict(space):
        raise SpaceError("space must be strict (apply the strict mapping first)")


def _constraint_rows(n: int, centers: CenterMatrix) -> np.ndarray:
    rows = pair_order(n)
    a = np.zeros((len(rows), 2 * n - 2), dtype=np.int64)

    def add(r, var, k, coef):
        if k > 1:
            a[r, (k - 2) + (0 if var == "h" else n - 1)] += coef

    for r, (p, q) in enumerate(rows):
        if p < q:
            i, j = p, q
            c = centers.lc(i, j)
            # h_i + h_j - 2 h_LC - l_i + l_j > 0
            add(r, "h", i, 1), add(r, "h", j, 1), add(r, "h", c, -2)
            add(r, "l", i, -1), add(r, "l", j, 1)
        else:
            j, i = p, q
            c = centers.rc(j, i)
            # -h_i - h_j + 2 h_RC + l_i - l_j > 0
            add(r, "h", i, -1), add(r, "h", j, -1), add(r, "h", c, 2)
            add(r, "l", i, 1), add(r, "l", j, -1)
    return a


def build_constraints(space: DissimilaritySpace) -> RationalMatrix:
    """The matrix ``A`` with ``A x > 0`` iff ``x`` encodes a valid caterpillar drawing."""
    _require_strict(space)
    n = space.n
    num = _constraint_rows(n, center_matrix(space))
    return RationalMatrix(num, 1, tuple(pair_order(n)), tuple(variable_labels(n)))


def partition_BN(a: RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """Split rows into consecutive pairs (``B``) and the rest (``N``)."""
    b_idx = [r for r, (p, q) in enumerate(a.row_labels) if abs(p - q) == 1]
    # N rows (hence Y columns) in row-major order of the matrix of centers
    n_idx = sorted((r for r, (p, q) in enumerate(a.row_labels) if abs(p - q) > 1),
                   key=lambda r: a.row_labels[r])
    b_idx.sort(key=lambda r: (a.row_labels[r][0] > a.row_labels[r][1], min(a.row_labels[r])))
    rb = a.num[b_idx, :].reshape(len(b_idx), a.shape[1])
    rn = a.num[n_idx, :].reshape(len(n_idx), a.shape[1])
    B = RationalMatrix(rb, a.den, tuple(a.row_labels[r] for r in b_idx), a.col_labels)
    N = RationalMatrix(rn, a.den, tuple(a.row_labels[r] for r in n_idx), a.col_labels)
    return B, N


def _consecutive_pairs(n: int) -> list[Pair]:
    upper = [(i, i + 1) for i in range(1, n)]
    return upper + [(j, i) for i, j in upper]


def inverse_B_transposed(n: int) -> RationalMatrix:
    """Closed form ``1/2 [[U, U], [U, -U]]`` with ``U`` the upper-triangular all-ones matrix."""
    if n < 2:
        raise SpaceError("n must be at least 2")
    u = np.triu(np.ones((n - 1, n - 1), dtype=np.int64))
    num = np.block([[u, u], [u, -u]])
    return RationalMatrix(num, 2, tuple(_consecutive_pairs(n)), tuple(variable_labels(n)))


def matrix_Y(space: DissimilaritySpace) -> RationalMatrix:
    """``Y = -(B^T)^{-1} N^T``: rows are consecutive pairs, columns the other pairs."""
    a = build_constraints(space)
    _, N = partition_BN(a)
    inv = inverse_B_transposed(space.n)
    num = -(inv.num @ N.num.T)
    return RationalMatrix(num, inv.den * N.den, inv.row_labels, N.row_labels)


@dataclass(frozen=True)
class ReducedSystem:
    """Kept (non-redundant) columns of ``Y``; ``dropped`` maps pair -> (rule, dominating pair)."""

    kept_pairs: tuple[Pair, ...]
    y_matrix: RationalMatrix
    dropped: dict = field(default_factory=dict)
    total_columns: int = 0

    @property
    def lc_kept(self) -> list[Pair]:
        return [p for p in self.kept_pairs if p[0] < p[1]]

    @property
    def rc_kept(self) -> list[Pair]:
        return [p for p in self.kept_pairs if p[0] > p[1]]

    def retained_fraction(self) -> float:
        if not self.total_columns:
            return 1.0
        return len(self.kept_pairs) / self.total_columns


def _minimal_pairs(pairs: list[Pair], reverse: bool) -> dict[Pair, Optional[Pair]]:
    """Map each pair to a dominating pair, or ``None`` if it is minimal.

    For LC groups ``(i', j')`` dominates ``(i, j)`` when ``i' <= i`` and ``j' <= j``;
    ``reverse`` flips both inequalities (RC groups).
    """
    sign = -1 if reverse else 1
    ordered = sorted(pairs, key=lambda p: (sign * p[0], sign * p[1]))
    out: dict[Pair, Optional[Pair]] = {}
    best: Optional[Pair] = None
    for p in ordered:
        if best is not None and sign * best[1] <= sign * p[1]:
            out[p] = best
        else:
            out[p] = None
            best = p
    return out


def redundancy_classes(space: DissimilaritySpace, centers: Optional[CenterMatrix] = None):
    """Classify every non-consecutive ordered pair.

    Returns ``(kept, dropped)`` where ``dropped`` maps a pair to ``("rule1", None)``
    or ``("rule2", dominating_pair)``. Works on centers only, no matrix needed.
    """
    n = space.n
    centers = centers or center_matrix(space)
    dropped: dict[Pair, tuple[str, Optional[Pair]]] = {}
    lc_groups: dict[int, list[Pair]] = {}
    rc_groups: dict[int, list[Pair]] = {}
    for p, q in pair_order(n):
        if abs(p - q) < 2:
            continue
        if p < q:
            c = centers.lc(p, q)
            if c == p:
                dropped[(p, q)] = ("rule1", None)
            else:
                lc_groups.setdefault(c, []).append((p, q))
        else:
            c = centers.rc(p, q)
            if c == p:
                dropped[(p, q)] = ("rule1", None)
            else:
                # RC labels are (j, i); compare on (i, j)
                rc_groups.setdefault(c, []).append((q, p))
    for group in lc_groups.values():
        for pair, dom in _minimal_pairs(group, reverse=False).items():
            if dom is not None:
                dropped[pair] = ("rule2", dom)
    for group in rc_groups.values():
        for (i, j), dom in _minimal_pairs(group, reverse=True).items():
            if dom is not None:
                dropped[(j, i)] = ("rule2", (dom[1], dom[0]))
    kept = sorted(pq for pq in pair_order(n) if abs(pq[0] - pq[1]) >= 2 and pq not in dropped)
    return kept, dropped


def eliminate_redundant(space: DissimilaritySpace, y: Optional[RationalMatrix] = None,
                        check: bool = True) -> ReducedSystem:
    """Drop non-positive columns and columns dominated by a same-center column."""
    _require_strict(space)
    y = y if y is not None else matrix_Y(space)
    kept, dropped = redundancy_classes(space)
    if check:
        for pair, (rule, dom) in dropped.items():
            col = y.num[:, y.col_index(pair)]
            if rule == "rule1":
                assert (col <= 0).all(), f"rule-1 column {pair} has a positive entry"
            else:
                other = y.num[:, y.col_index(dom)]
                assert (col <= other).all(), f"column {pair} is not dominated by {dom}"
    return ReducedSystem(tuple(kept), y.select_columns(kept), dropped, y.shape[1])


@dataclass(frozen=True)
class GordanOutcome:
    """Either ``primal`` (``A x >= 1``) or ``certificate`` (``y >= 0, y != 0, A^T y = 0``)."""

    kind: str
    vector: tuple[Fraction, ...]

    @property
    def is_primal(self) -> bool:
        return self.kind == "primal"

    @property
    def x(self) -> Optional[tuple[Fraction, ...]]:
        return self.vector if self.kind == "primal" else None

    @property
    def y(self) -> Optional[tuple[Fraction, ...]]:
        return self.vector if self.kind == "certificate" else None


def verify_outcome(a: RationalMatrix, o: GordanOutcome) -> bool:
    m, k = a.shape
    if o.kind == "primal":
        if len(o.vector) != k:
            raise SpaceError(f"primal has length {len(o.vector)}, matrix has {k} columns")
        return all(v >= 1 for v in a.dot(o.vector))
    if o.kind == "certificate":
        if len(o.vector) != m:
            raise SpaceError(f"certificate has length {len(o.vector)}, matrix has {m} rows")
        if any(v < 0 for v in o.vector) or not any(o.vector):
            return False
        return all(v == 0 for v in a.tdot(o.vector))
    raise SpaceError(f"unknown outcome kind {o.kind!r}")


def _exact_gordan(fa: list[list[Fraction]], m: int, k: int) -> GordanOutcome:
    # y >= 0 with A^T y = 0 and sum(y) = 1, else Farkas (x, t): A x + t >= 0, t < 0
    M = [[fa[r][c] for r in range(m)] for c in range(k)] + [[Fraction(1)] * m]
    b = [Fraction(0)] * k + [Fraction(1)]
    status, vec = _lp.phase1(M, b)
    if status == "feasible":
        return GordanOutcome("certificate", tuple(vec))
    x, t = vec[:k], vec[k]
    return GordanOutcome("primal", tuple(v / -t for v in x))


def _scaled_primal(a: RationalMatrix, x: list[Fraction]) -> Optional[GordanOutcome]:
    ax = a.dot(x)
    lo = min(ax) if ax else Fraction(1)
    if lo <= 0:
        return None
    return GordanOutcome("primal", tuple(v / lo for v in x))


def _repair_certificate(a: RationalMatrix, y: np.ndarray) -> Optional[GordanOutcome]:
    """Turn a floating-point kernel vector into an exact one, or give up."""
    m, k = a.shape
    rounded = GordanOutcome("certificate", tuple(max(v, Fraction(0)) for v in _lp.rationalize(y)))
    if verify_outcome(a, rounded):
        return rounded
    support = [r for r in range(m) if y[r] > 1e-9]
    fs = RationalMatrix(a.num[support, :].reshape(len(support), k), a.den).to_fractions()
    M = [[fs[r][c] for r in range(len(support))] for c in range(k)] + [[Fraction(1)] * len(support)]
    b = [Fraction(0)] * k + [Fraction(1)]
    ys = _lp.solve_exact(M, b)
    if ys is None or any(v < 0 for v in ys):
        st, ys = _lp.phase1(M, b)
        if st != "feasible":
            return None
    full = [Fraction(0)] * m
    for r, v in zip(support, ys):
        full[r] = v
    out = GordanOutcome("certificate", tuple(full))
    return out if verify_outcome(a, out) else None


def solve_gordan(a: RationalMatrix) -> GordanOutcome:
    """Decide ``A x > 0`` versus a nonnegative kernel vector of ``A^T``; always exact.

    HiGHS proposes an answer, it is rebuilt in rationals and checked; anything
    that fails the check goes to the exact simplex.
    """
    m, k = a.shape
    if m == 0:
        return GordanOutcome("primal", (Fraction(0),) * k)
    if k == 0:
        return GordanOutcome("certificate", (Fraction(1),) + (Fraction(0),) * (m - 1))
    f = a.to_float()
    status, x = _lp.float_lp(np.zeros(k), A_ub=-f, b_ub=-2 * np.ones(m), bounds=(None, None))
    if status == 0:
        out = _scaled_primal(a, _lp.rationalize(x))
        if out is not None:
            return out
    elif status == 2:
        a_eq = np.vstack([f.T, np.ones((1, m))])
        b_eq = np.zeros(k + 1)
        b_eq[-1] = 1
        status, y = _lp.float_lp(np.zeros(m), A_eq=a_eq, b_eq=b_eq)
        if status == 0:
            out = _repair_certificate(a, y)
            if out is not None:
                return out
    log.debug("falling back to exact simplex for a %dx%d system", m, k)
    out = _exact_gordan(a.to_fractions(), m, k)
    assert verify_outcome(a, out), "exact simplex produced an unverifiable outcome"
    return out


class LpsResult(NamedTuple):
    feasible: bool
    witness: Optional[tuple[Fraction, ...]]


def _exact_nonneg_kernel(y: RationalMatrix, support: Sequence[int]) -> Optional[list[Fraction]]:
    """Exact ``z >= 0``, ``sum z = 1``, ``Y z >= 0`` using only ``support`` columns."""
    p = y.shape[0]
    cols = list(support)
    fr = y.to_fractions()
    # variables: z (cols) then surplus s (p): Y z - s = 0, sum z = 1
    M = []
    for r in range(p):
        M.append([fr[r][c] for c in cols] + [Fraction(-1) if s == r else Fraction(0) for s in range(p)])
    M.append([Fraction(1)] * len(cols) + [Fraction(0)] * p)
    b = [Fraction(0)] * p + [Fraction(1)]
    status, vec = _lp.phase1(M, b)
    if status != "feasible":
        return None
    z = [Fraction(0)] * y.shape[1]
    for c, v in zip(cols, vec):
        z[c] = v
    return z


def _lps_witness_ok(y: RationalMatrix, z) -> bool:
    return all(v >= 0 for v in z) and any(z) and all(v >= 0 for v in y.dot(z))


def _ville_certificate(y: RationalMatrix) -> Optional[list[Fraction]]:
    """``w >= 0`` with ``Y^T w < 0``: proof that no nonzero ``z >= 0`` has ``Y z >= 0``."""
    p, q = y.shape
    status, w = _lp.float_lp(np.zeros(p), A_ub=y.to_float().T, b_ub=-np.ones(q))
    if status != 0:
        return None
    wr = [max(v, Fraction(0)) for v in _lp.rationalize(w)]
    if all(v < 0 for v in y.tdot(wr)):
        return wr
    return None


def _lps_decide(y: RationalMatrix, method: str) -> LpsResult:
    p, q = y.shape
    if q == 0:
        return LpsResult(False, None)
    f = y.to_float()
    candidates = []
    if method == "sweep":
        for t in range(q):
            bounds = [(0, None)] * q
            bounds[t] = (1, None)
            status, z = _lp.float_lp(np.zeros(q), A_ub=-f, b_ub=np.zeros(p), bounds=bounds)
            if status == 0:
                candidates.append(z)
                break
    elif method == "normalized":
        status, z = _lp.float_lp(np.zeros(q), A_ub=-f, b_ub=np.zeros(p),
                                 A_eq=np.ones((1, q)), b_eq=np.ones(1))
        if status == 0:
            candidates.append(z)
    else:
        raise ValueError(f"unknown method {method!r}")
    for z in candidates:
        zr = _lp.rationalize(z)
        if _lps_witness_ok(y, zr):
            return LpsResult(True, tuple(zr))
        support = [c for c in range(q) if z[c] > 1e-9]
        exact = _exact_nonneg_kernel(y, support)
        if exact is not None:
            return LpsResult(True, tuple(exact))
    if not candidates and _ville_certificate(y) is not None:
        return LpsResult(False, None)
    log.debug("exact fallback for LP-S with %d columns", q)
    exact = _exact_nonneg_kernel(y, range(q))
    if exact is not None:
        return LpsResult(True, tuple(exact))
    return LpsResult(False, None)


def solve_lps(space: DissimilaritySpace, method: str = "sweep", columns: str = "reduced") -> LpsResult:
    """Is there ``y_N >= 0``, ``y_N != 0`` with ``Y y_N >= 0``?

    ``method="sweep"`` probes each column with ``y_N[t] >= 1``; ``"normalized"``
    solves one LP with ``sum(y_N) = 1``. Both answers are exact: a feasible
    witness is checked in rationals, infeasibility by a rational dual vector.
    """
    if method not in ("sweep", "normalized"):
        raise ValueError(f"unknown method {method!r}")
    _require_strict(space)
    y = matrix_Y(space)
    if columns == "reduced":
        red = eliminate_redundant(space, y)
        return _lps_decide(red.y_matrix, method)
    if columns == "full":
        return _lps_decide(y, method)
    raise ValueError(f"unknown column set {columns!r}")


@dataclass(frozen=True)
class Certificate:
    """No caterpillar drawing exists: ``y >= 0``, ``y != 0``, ``A^T y = 0`` for ``A`` of ``strict``."""

    strict: DissimilaritySpace
    matrix: RationalMatrix
    outcome: GordanOutcome

    @property
    def y(self) -> dict[Pair, Fraction]:
        return {lab: v for lab, v in zip(self.matrix.row_labels, self.outcome.vector) if v}

    def verify(self) -> bool:
        return verify_outcome(self.matrix, self.outcome)


def _caterpillar_from_solution(n: int, x: Sequence[Fraction]) -> Caterpillar:
    h = [Fraction(0)] + list(x[: n - 1])
    l = [Fraction(0)] + list(x[n - 1:])
    shift = min(l)
    l = [v - shift for v in l]
    # leaf 1's leg folds into the spine: same distances, h_1 = l_1 = 0
    lead = l[0]
    h = [Fraction(0)] + [v + lead for v in h[1:]]
    l[0] = Fraction(0)
    return Caterpillar(tuple(h), tuple(l))


def draw_in_caterpillar(space: DissimilaritySpace, cross_check: bool = True) -> Caterpillar | Certificate:
    """Valid caterpillar drawing of an identity-compatible space, or a verified certificate."""
    if not is_identity_compatible(space):
        raise SpaceError("space is not identity-compatible; normalize its order first")
    strict = space if is_strict(space) else strict_mapping(space)
    a = build_constraints(strict)
    outcome = solve_gordan(a)
    assert verify_outcome(a, outcome)
    if cross_check:
        lps = solve_lps(strict, method="normalized")
        if lps.feasible == outcome.is_primal:
            raise AssertionError("Gordan outcome and LP-S disagree")
    if not outcome.is_primal:
        return Certificate(strict, a, outcome)
    cat = _caterpillar_from_solution(space.n, outcome.vector)
    assert all(b > a_ for a_, b in zip(cat.h, cat.h[1:])), "spine must grow strictly"
    metric = caterpillar_metric(cat)
    assert drawing_violation(strict, metric) is None, "drawing invalid for strict mapping"
    assert drawing_violation(space, metric) is None, "drawing invalid for original space"
    return cat


def midpoint_condition(space: DissimilaritySpace) -> bool:
    """``LC(i,j) <= (i+j)/2 <= RC(j,i)`` for every pair ``i < j``."""
    _require_strict(space)
    c = center_matrix(space)
    for i, j in space.pairs():
        # compare doubled values to stay in integers
        if not (2 * c.lc(i, j) <= i + j <= 2 * c.rc(j, i)):
            return False
    return True


def single_nonredundant_condition(space: DissimilaritySpace) -> bool:
    """At most one kept left-center column, or at most one kept right-center column."""
    _require_strict(space)
    kept, _ = redundancy_classes(space)
    n_lc = sum(1 for p, q in kept if p < q)
    n_rc = len(kept) - n_lc
    return n_lc <= 1 or n_rc <= 1


def outcome_to_json(result: Caterpillar | Certificate) -> dict:
    if isinstance(result, Caterpillar):
        return {"status": "drawing", "n": result.n,
                "h": [format_value(v) for v in result.h],
                "l": [format_value(v) for v in result.l]}
    return {"status": "certificate",
            "y": {f"({i},{j})": format_value(v) for (i, j), v in result.y.items()}}
