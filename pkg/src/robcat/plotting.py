"""Matplotlib figures written straight to files (Agg backend, no display)."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .lab import ExperimentReport  # noqa: E402
from .treegeom import Caterpillar  # noqa: E402


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps repeated renders byte-stable where the backend allows
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None} if path.suffix == ".png" else None)
    plt.close(fig)
    return path


def plot_experiment(report: ExperimentReport, path) -> Path:
    """Mean retained fraction per size with a one-sigma band."""
    ns = [r.n for r in report.rows]
    mu = [r.mean_retained for r in report.rows]
    sd = [r.mean_retained * r.cv for r in report.rows]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.errorbar(ns, mu, yerr=sd, marker="o", capsize=3, label=f"{report.generator} generator")
    ax.set_xlabel("n")
    ax.set_ylabel("retained column fraction")
    ax.set_ylim(0, max(1e-9, max(m + s for m, s in zip(mu, sd))) * 1.15)
    ax.grid(alpha=0.3)
    ax.legend()
    ax.set_title(f"redundancy elimination (seed {report.seed})")
    return _save(fig, path)


def plot_caterpillar(cat: Caterpillar, path, labels=None) -> Path:
    """Spine on the x axis at the leaf offsets; legs hang down with their lengths."""
    labels = labels or [str(i) for i in range(1, cat.n + 1)]
    h = [float(v) for v in cat.h]
    legs = [float(v) for v in cat.l]
    fig, ax = plt.subplots(figsize=(max(4, cat.n * 0.6), 3))
    ax.plot([h[0], h[-1]], [0, 0], color="black", lw=2, zorder=1)
    # leaves sharing a spine point fan out sideways
    seen: dict[float, int] = {}
    for k, (x, depth) in enumerate(zip(h, legs)):
        slot = seen.get(x, 0)
        seen[x] = slot + 1
        dx = 0.15 * slot * (h[-1] - h[0] or 1) / max(1, cat.n)
        y = -max(depth, 0.0)
        ax.plot([x, x + dx], [0, y], color="tab:blue", lw=1)
        ax.scatter([x + dx], [y], color="tab:blue", zorder=2)
        ax.annotate(labels[k], (x + dx, y), textcoords="offset points", xytext=(0, -12), ha="center")
    ax.scatter(sorted(set(h)), [0] * len(set(h)), color="black", s=12, zorder=3)
    ax.set_yticks([])
    ax.set_xlabel("spine position")
    for side in ("left", "right", "top"):
        ax.spines[side].set_visible(False)
    return _save(fig, path)
