"""Dissimilarity spaces, element orders and the basic Robinson predicates.

Elements are 1-indexed in every public function; values are exact
:class:`fractions.Fraction` instances.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "SpaceError",
    "ParseError",
    "DissimilaritySpace",
    "ElementOrder",
    "FiniteMetric",
    "parse_value",
    "parse_space",
    "format_space",
    "is_identity_compatible",
    "is_strict",
    "permute",
    "find_compatible_order",
    "ordinal_matrix",
]

DEFAULT_ORDER_LIMIT = 10


class SpaceError(ValueError):
    """Invalid dissimilarity, metric or order data."""


class ParseError(SpaceError):
    def __init__(self, message: str, row: Optional[int] = None, col: Optional[int] = None):
        self.row = row
        self.col = col
        where = ""
        if row is not None and col is not None:
            where = f" at ({row},{col})"
        elif row is not None:
            where = f" at line {row}"
        super().__init__(message + where)


_VALUE_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")
_RATIO_RE = re.compile(r"^[+-]?\d+/\d+$")


def parse_value(token: str) -> Fraction:
    """Parse an integer, decimal or ``p/q`` token exactly."""
    if _VALUE_RE.match(token):
        return Fraction(token)
    if _RATIO_RE.match(token):
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {token!r}")
        return Fraction(int(num), int(den))
    raise ValueError(f"bad token {token!r}")


def _as_fraction_rows(rows: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def _check_square(rows, what: str) -> int:
    n = len(rows)
    for r, row in enumerate(rows, start=1):
        if len(row) != n:
            raise SpaceError(f"{what}: row {r} has {len(row)} entries, expected {n}")
    return n


def _validate_dissimilarity(rows, what: str, exc=SpaceError) -> None:
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 0:
            raise exc(f"{what}: nonzero diagonal", i + 1, i + 1)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] != rows[j][i]:
                a, b = (i, j) if i > j else (j, i)
                raise exc(f"{what}: asymmetric entry", a + 1, b + 1)
            if rows[i][j] <= 0:
                raise exc(f"{what}: non-positive off-diagonal entry", i + 1, j + 1)


def _loc_error(message: str, row: int, col: int) -> SpaceError:
    return SpaceError(f"{message} at ({row},{col})")


@dataclass(frozen=True)
class DissimilaritySpace:
    """Symmetric matrix of exact dissimilarities with zero diagonal.

    ``space[i, j]`` gives the 1-indexed value ``rho(i, j)``.
    """

    rho: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = _as_fraction_rows(self.rho)
        n = _check_square(rows, "dissimilarity")
        if n < 2:
            raise SpaceError("a dissimilarity space needs at least 2 elements")
        _validate_dissimilarity(rows, "dissimilarity", _loc_error)
        object.__setattr__(self, "rho", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "DissimilaritySpace":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_pairs(cls, n: int, values: dict) -> "DissimilaritySpace":
        """Build from a mapping ``{(i, j): value}`` over pairs ``i < j`` (1-indexed)."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in values.items():
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = Fraction(v)
        return cls.from_rows(rows)

    @property
    def n(self) -> int:
        return len(self.rho)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i},{j}) out of range 1..{self.n}")
        return self.rho[i - 1][j - 1]

    def pairs(self):
        """Unordered pairs ``(i, j)``, ``i < j``, in lexicographic order."""
        return itertools.combinations(range(1, self.n + 1), 2)


@dataclass(frozen=True)
class ElementOrder:
    """A permutation of ``1..n``; ``perm[k]`` is the element placed at position ``k + 1``."""

    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise SpaceError(f"not a permutation of 1..{len(perm)}: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "ElementOrder":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def inverse(self) -> "ElementOrder":
        inv = [0] * self.n
        for pos, p in enumerate(self.perm, start=1):
            inv[p - 1] = pos
        return ElementOrder(tuple(inv))

    def reversed(self) -> "ElementOrder":
        return ElementOrder(self.perm[::-1])


@dataclass(frozen=True)
class FiniteMetric:
    """Exact finite metric on ``1..n``; ``m[i, j]`` is 1-indexed."""

    d: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = _as_fraction_rows(self.d)
        n = _check_square(rows, "metric")
        _validate_dissimilarity(rows, "metric", _loc_error)
        for i, j, k in itertools.product(range(n), repeat=3):
            if rows[i][k] > rows[i][j] + rows[j][k]:
                raise SpaceError(
                    f"metric: triangle inequality fails for ({i + 1},{j + 1},{k + 1})"
                )
        object.__setattr__(self, "d", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "FiniteMetric":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.d)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i},{j}) out of range 1..{self.n}")
        return self.d[i - 1][j - 1]

    def permuted(self, order: ElementOrder) -> "FiniteMetric":
        p = [k - 1 for k in order.perm]
        return FiniteMetric(tuple(tuple(self.d[a][b] for b in p) for a in p))


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_space(text: str) -> DissimilaritySpace:
    """Parse the matrix file format: ``n`` on the first line, then ``n`` rows.

    Blank lines and ``#`` comments are ignored; CRLF line endings are accepted.
    Every error is a :class:`ParseError` carrying a row/column location.
    """
    lines = []
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        body = _strip_comment(raw)
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    if not re.fullmatch(r"\d+", header):
        raise ParseError(f"bad size token {header!r}", lineno)
    n = int(header)
    if n < 2:
        raise ParseError(f"size must be at least 2, got {n}", lineno)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"dimension mismatch: expected {n} rows, found {len(body)}")
    rows = []
    for r, (lineno, line) in enumerate(body, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(
                f"dimension mismatch: row has {len(tokens)} values, expected {n}", r
            )
        row = []
        for c, tok in enumerate(tokens, start=1):
            try:
                row.append(parse_value(tok))
            except ValueError as e:
                raise ParseError(f"syntax error: {e}", r, c) from None
        rows.append(row)
    for i in range(n):
        if rows[i][i] != 0:
            raise ParseError("nonzero diagonal", i + 1, i + 1)
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise ParseError("asymmetry", i + 1, j + 1)
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] <= 0:
                raise ParseError("non-positive off-diagonal value", i + 1, j + 1)
    return DissimilaritySpace.from_rows(rows)


def format_value(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_space(space: DissimilaritySpace) -> str:
    """Inverse of :func:`parse_space` (exact, ``p/q`` for non-integers)."""
    cells = [[format_value(v) for v in row] for row in space.rho]
    width = max(len(c) for row in cells for c in row)
    out = [str(space.n)]
    out += [" ".join(c.rjust(width) for c in row) for row in cells]
    return "\n".join(out) + "\n"


def is_identity_compatible(space: DissimilaritySpace) -> bool:
    """True iff ``rho(i,k) >= max(rho(i,j), rho(j,k))`` for all ``i < j < k``.

    Equivalent to every row growing to the right of the diagonal and every
    column growing upwards from it, which is an O(n^2) check.
    """
    r = space.rho
    n = space.n
    for i in range(n):
        for k in range(i + 2, n):
            if r[i][k] < r[i][k - 1] or r[i][k] < r[i + 1][k]:
                return False
    return True


def is_strict(space: DissimilaritySpace) -> bool:
    values = [space.rho[i - 1][j - 1] for i, j in space.pairs()]
    return len(set(values)) == len(values)


def permute(space: DissimilaritySpace, order: ElementOrder) -> DissimilaritySpace:
    """Relabel so that position ``i`` holds element ``order.perm[i]``."""
    if order.n != space.n:
        raise SpaceError(f"order has length {order.n}, space has {space.n} elements")
    p = [k - 1 for k in order.perm]
    return DissimilaritySpace(tuple(tuple(space.rho[a][b] for b in p) for a in p))


def find_compatible_order(
    space: DissimilaritySpace, limit: int = DEFAULT_ORDER_LIMIT
) -> Optional[ElementOrder]:
    """Brute-force search for a compatible order; ``None`` if the space is not Robinson."""
    if space.n > limit:
        raise SpaceError(f"size {space.n} exceeds brute-force limit {limit}")
    if is_identity_compatible(space):
        return ElementOrder.identity(space.n)
    r = space.rho
    n = space.n
    for perm in itertools.permutations(range(n)):
        # a permutation and its reversal are equivalent; test one of each
        if perm[0] > perm[-1]:
            continue
        ok = True
        for a in range(n):
            for c in range(a + 2, n):
                rac = r[perm[a]][perm[c]]
                for b in range(a + 1, c):
                    if rac < r[perm[a]][perm[b]] or rac < r[perm[b]][perm[c]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return ElementOrder(tuple(p + 1 for p in perm))
    return None


def ordinal_matrix(space: DissimilaritySpace) -> np.ndarray:
    """Integer matrix with the same order relations as ``space.rho`` (0-indexed)."""
    values = sorted({v for row in space.rho for v in row})
    rank = {v: k for k, v in enumerate(values)}
    return np.array([[rank[v] for v in row] for row in space.rho], dtype=np.int64)
