"""Strict mapping of Robinson spaces and the matrix of left/right centers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .core import DissimilaritySpace, SpaceError, is_identity_compatible, is_strict, ordinal_matrix

__all__ = [
    "PairRanking",
    "CenterMatrix",
    "pair_ranking",
    "strict_mapping",
    "left_center",
    "right_center",
    "center_matrix",
]


@dataclass(frozen=True)
class PairRanking:
    """Rank ``1..n(n-1)/2`` of every unordered pair ``(i, j)``, ``i < j``."""

    n: int
    rank: Mapping[tuple[int, int], int]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.rank[(min(i, j), max(i, j))]


@dataclass(frozen=True)
class CenterMatrix:
    """``c[i][j]`` (0-indexed storage, 1-indexed values): LC above the diagonal, RC below."""

    c: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.c)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.c[i - 1][j - 1]

    def lc(self, i: int, j: int) -> int:
        assert i < j
        return self.c[i - 1][j - 1]

    def rc(self, j: int, i: int) -> int:
        assert i < j
        return self.c[j - 1][i - 1]

    def to_json(self) -> dict:
        return {"centers": [list(row) for row in self.c]}


def pair_ranking(space: DissimilaritySpace) -> PairRanking:
    # rho ascending, then i descending, then j ascending
    pairs = sorted(space.pairs(), key=lambda p: (space[p], -p[0], p[1]))
    return PairRanking(space.n, {p: k for k, p in enumerate(pairs, start=1)})


def strict_mapping(space: DissimilaritySpace) -> DissimilaritySpace:
    """Replace every dissimilarity by the rank of its pair.

    The result is strict, keeps the identity order compatible, and any valid
    drawing of it is a valid drawing of ``space``.
    """
    if not is_identity_compatible(space):
        raise SpaceError("strict mapping needs an identity-compatible space")
    ranking = pair_ranking(space)
    out = DissimilaritySpace.from_pairs(space.n, ranking.rank)
    assert is_strict(out) and is_identity_compatible(out), "strict mapping broke compatibility"
    return out


def left_center(space: DissimilaritySpace, i: int, k: int) -> int:
    """Largest ``j`` in ``[i, k]`` with ``rho(i, j) < rho(j, k)``; ``i`` when ``i == k``."""
    if i > k:
        raise SpaceError(f"left center needs i <= k, got ({i},{k})")
    if i == k:
        return i
    for j in range(k, i - 1, -1):
        if space[i, j] < space[j, k]:
            return j
    raise AssertionError("unreachable: j = i always qualifies")


def right_center(space: DissimilaritySpace, k: int, i: int) -> int:
    """Smallest ``j`` in ``[i, k]`` with ``rho(i, j) > rho(j, k)``; ``i`` when ``i == k``."""
    if i > k:
        raise SpaceError(f"right center needs i <= k, got ({k},{i})")
    if i == k:
        return i
    for j in range(i, k + 1):
        if space[i, j] > space[j, k]:
            return j
    raise AssertionError("unreachable: j = k always qualifies")


def _center_arrays(r: np.ndarray) -> np.ndarray:
    """Vectorized scan over an ordinal matrix; returns 1-indexed centers."""
    n = r.shape[0]
    c = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n)
    for i in range(n):
        # closer[j, k]: rho(i, j) < rho(j, k); farther[j, k]: rho(i, j) > rho(j, k)
        closer = r[i][:, None] < r
        farther = r[i][:, None] > r
        in_range = (idx[:, None] >= i) & (idx[:, None] <= idx[None, :])
        closer &= in_range
        farther &= in_range
        # LC(i, k): last j with closer; RC(k, i): first j with farther
        last = np.where(closer.any(axis=0), n - 1 - np.argmax(closer[::-1], axis=0), -1)
        first = np.where(farther.any(axis=0), np.argmax(farther, axis=0), -1)
        for k in range(i + 1, n):
            c[i, k] = last[k] + 1
            c[k, i] = first[k] + 1
        c[i, i] = i + 1
    return c


def center_matrix(space: DissimilaritySpace) -> CenterMatrix:
    if not is_identity_compatible(space):
        raise SpaceError("centers are defined for identity-compatible spaces only")
    c = _center_arrays(ordinal_matrix(space))
    return CenterMatrix(tuple(tuple(int(v) for v in row) for row in c))
