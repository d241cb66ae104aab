"""Random and exhaustive Robinson spaces, and the redundancy experiment.

Randomness comes from numpy's Philox counter-based generator. Experiment
instances get their own stream from ``SeedSequence(seed, spawn_key=(n, index))``
so results do not depend on scheduling.
"""
from __future__ import annotations

import itertools
import logging
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .core import DissimilaritySpace, SpaceError, format_space
from .feasibility import Caterpillar, draw_in_caterpillar, redundancy_classes
from .strictify import center_matrix, strict_mapping
from .treegeom import caterpillar_metric, drawing_violation

log = logging.getLogger(__name__)

GENERATORS = ("line", "increments")
ENUMERATION_LIMIT = 5
WORKERS_ENV = "ROBCAT_WORKERS"


def philox(seed: int, *key: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=tuple(key))
    return np.random.Generator(np.random.Philox(ss))


def _increment_rows(n: int, rng: np.random.Generator, first=(1, 100), step=(1, 100)) -> list[list[int]]:
    rho = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rho[i][i + 1] = int(rng.integers(first[0], first[1] + 1))
    for g in range(2, n):
        for i in range(n - g):
            shoulder = max(rho[i][i + g - 1], rho[i + 1][i + g])
            rho[i][i + g] = shoulder + int(rng.integers(step[0], step[1] + 1))
    for i in range(n):
        for j in range(i):
            rho[i][j] = rho[j][i]
    return rho


def _check_n(n: int) -> None:
    if n < 2:
        raise SpaceError(f"need n >= 2, got {n}")


def random_robinson(n: int, seed: int, *, rng: Optional[np.random.Generator] = None) -> DissimilaritySpace:
    """Strict Robinson space grown outward from the diagonal.

    Consecutive pairs get uniform integers in [1, 100]; each wider pair adds a
    uniform integer in [1, 100] to the larger of its two shoulders.
    """
    _check_n(n)
    rng = rng or philox(seed)
    return strict_mapping(DissimilaritySpace.from_rows(_increment_rows(n, rng)))


def random_line_robinson(n: int, seed: int, *, rng: Optional[np.random.Generator] = None) -> DissimilaritySpace:
    """Strict mapping of ``|x_i - x_j|`` for ``n`` distinct sorted uniform integers in [0, 1e9)."""
    _check_n(n)
    rng = rng or philox(seed)
    x = sorted(int(v) for v in rng.choice(10**9, size=n, replace=False))
    return strict_mapping(DissimilaritySpace.from_rows([[abs(a - b) for b in x] for a in x]))


def random_tied_robinson(n: int, seed: int, *, rng: Optional[np.random.Generator] = None) -> DissimilaritySpace:
    """Non-strict Robinson space: small increments, zero allowed beyond the diagonal band."""
    _check_n(n)
    rng = rng or philox(seed)
    return DissimilaritySpace.from_rows(_increment_rows(n, rng, first=(1, 3), step=(0, 2)))


_GENERATOR_FUNCS = {"line": random_line_robinson, "increments": random_robinson}


def generate(kind: str, n: int, seed: int, *key: int) -> DissimilaritySpace:
    try:
        fn = _GENERATOR_FUNCS[kind]
    except KeyError:
        raise SpaceError(f"unknown generator {kind!r}; choose from {GENERATORS}") from None
    return fn(n, seed, rng=philox(seed, *key) if key else None)


def _robinson_pairs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    # (i, k) must outrank both (i, k-1) and (i+1, k)
    below = [[] for _ in pairs]
    for (i, k), idx in index.items():
        if k - i >= 2:
            below[idx] = [index[(i, k - 1)], index[(i + 1, k)]]
    return pairs, below


def _space_from_ranks(n: int, pairs, ranks) -> DissimilaritySpace:
    return DissimilaritySpace.from_pairs(n, {(i + 1, k + 1): r for (i, k), r in zip(pairs, ranks)})


def enumerate_strict_spaces(n: int) -> Iterator[DissimilaritySpace]:
    """Every assignment of ranks ``1..C(n,2)`` to pairs that keeps the identity order compatible.

    Generated as linear extensions of the pair poset (depth-first), which
    yields exactly the permutations a brute-force filter would keep.
    """
    if n > ENUMERATION_LIMIT:
        raise SpaceError(f"enumeration limited to n <= {ENUMERATION_LIMIT}, got {n}")
    _check_n(n)
    pairs, below = _robinson_pairs(n)
    m = len(pairs)
    above = [[] for _ in pairs]
    for idx, bs in enumerate(below):
        for b in bs:
            above[b].append(idx)
    missing = [len(set(bs)) for bs in below]
    ranks = [0] * m

    def extend(rank: int, available: list[int]):
        if rank > m:
            yield _space_from_ranks(n, pairs, ranks)
            return
        for pos, idx in enumerate(available):
            ranks[idx] = rank
            nxt = available[:pos] + available[pos + 1:]
            for up in above[idx]:
                missing[up] -= 1
                if missing[up] == 0:
                    nxt.append(up)
            yield from extend(rank + 1, sorted(nxt))
            for up in above[idx]:
                missing[up] += 1
            ranks[idx] = 0

    yield from extend(1, [k for k in range(m) if missing[k] == 0])


def count_strict_spaces_bruteforce(n: int) -> int:
    """Filter all ``C(n,2)!`` rank permutations; the oracle for :func:`enumerate_strict_spaces`."""
    pairs, below = _robinson_pairs(n)
    count = 0
    for perm in itertools.permutations(range(1, len(pairs) + 1)):
        if all(perm[idx] > perm[b] for idx, bs in enumerate(below) for b in bs):
            count += 1
    return count


@dataclass
class SizeStats:
    n: int
    samples: int
    mean_retained: float
    cv: float
    feasible: Optional[int] = None
    infeasible: Optional[int] = None
    seconds: float = 0.0


@dataclass
class ExperimentReport:
    generator: str
    seed: int
    rows: list[SizeStats] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"generator": self.generator, "seed": self.seed, "rows": [asdict(r) for r in self.rows]}

    def stats_only(self) -> list[tuple]:
        """Everything but wall-clock times."""
        return [(r.n, r.samples, r.mean_retained, r.cv, r.feasible, r.infeasible) for r in self.rows]

    def table(self) -> str:
        head = ["n"] + [str(r.n) for r in self.rows]
        mu = ["mean retained"] + [f"{100 * r.mean_retained:.2f}%" for r in self.rows]
        cv = ["sigma/mean"] + [f"{100 * r.cv:.2f}%" for r in self.rows]
        lines = [head, mu, cv]
        if any(r.feasible is not None for r in self.rows):
            lines.append(["drawing/none"] + [f"{r.feasible}/{r.infeasible}" for r in self.rows])
        widths = [max(len(line[k]) for line in lines) for k in range(len(head))]
        out = [" ".join(c.rjust(w) for c, w in zip(line, widths)) for line in lines]
        out.append(f"generator={self.generator} seed={self.seed} (reference generator unknown; compare as a band)")
        return "\n".join(out) + "\n"


def _instance(args) -> tuple[float, Optional[bool]]:
    generator, n, seed, index, solve = args
    space = generate(generator, n, seed, n, index)
    kept, _ = redundancy_classes(space)
    frac = len(kept) / ((n - 1) * (n - 2)) if n > 2 else 1.0
    feasible = None
    if solve:
        feasible = isinstance(draw_in_caterpillar(space, cross_check=False), Caterpillar)
    return frac, feasible


def _workers(requested: Optional[int]) -> int:
    if requested is not None:
        return max(1, requested)
    env = os.environ.get(WORKERS_ENV)
    return max(1, int(env)) if env else 1


def reduction_experiment(sizes: Sequence[int], samples: int, seed: int, *, generator: str = "increments",
                         solve: bool = False, workers: Optional[int] = None) -> ExperimentReport:
    """Mean and coefficient of variation of the retained column fraction per size."""
    if not sizes:
        raise SpaceError("sizes must be non-empty")
    if samples < 1:
        raise SpaceError("samples must be >= 1")
    if generator not in GENERATORS:
        raise SpaceError(f"unknown generator {generator!r}")
    report = ExperimentReport(generator, seed)
    nw = _workers(workers)
    for n in sizes:
        _check_n(n)
        jobs = [(generator, n, seed, k, solve) for k in range(samples)]
        t0 = time.perf_counter()
        if nw > 1:
            with ProcessPoolExecutor(nw) as pool:
                results = list(pool.map(_instance, jobs))
        else:
            results = [_instance(j) for j in jobs]
        fracs = [f for f, _ in results]
        mean = statistics.fmean(fracs)
        cv = statistics.stdev(fracs) / mean if samples > 1 and mean > 0 else 0.0
        row = SizeStats(n, samples, mean, cv, seconds=time.perf_counter() - t0)
        if solve:
            row.feasible = sum(1 for _, ok in results if ok)
            row.infeasible = samples - row.feasible
        log.info("n=%d mean=%.4f cv=%.4f", n, mean, cv)
        report.rows.append(row)
    return report


@dataclass
class ExhaustiveReport:
    n: int
    spaces: int
    feasible: int
    infeasible: int
    center_classes: int
    infeasible_spaces: list = field(default_factory=list)
    note: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["infeasible_spaces"] = [format_space(s) for s in self.infeasible_spaces]
        return d


def exhaustive_drawing_check(n: int) -> ExhaustiveReport:
    """Try every enumerated strict space on ``n`` elements.

    The LP is solved once per matrix of centers (it depends on nothing else);
    the resulting drawing is then re-verified against each space of the class.
    """
    drawings: dict[tuple, object] = {}
    rep = ExhaustiveReport(n, 0, 0, 0, 0)
    for space in enumerate_strict_spaces(n):
        rep.spaces += 1
        key = center_matrix(space).c
        if key not in drawings:
            drawings[key] = draw_in_caterpillar(space)
        result = drawings[key]
        if isinstance(result, Caterpillar) and drawing_violation(space, caterpillar_metric(result)) is None:
            rep.feasible += 1
            continue
        if isinstance(result, Caterpillar):
            # the class drawing failed on this member; solve it on its own
            result = draw_in_caterpillar(space)
            if isinstance(result, Caterpillar):
                rep.feasible += 1
                continue
        rep.infeasible += 1
        rep.infeasible_spaces.append(space)
    rep.center_classes = len(drawings)
    return rep
