"""Matplotlib figures for CLI reports. Every function writes a file and returns its path."""

from __future__ import annotations

import math
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .poset import flag_name  # noqa: E402
from .stratified import StratSSet  # noqa: E402

__all__ = ["plot_counterexample", "plot_stratified", "plot_entry_table", "plot_winding"]

_PALETTE = ["#c0392b", "#2471a3", "#229954", "#b9770e", "#7d3c98", "#616a6b"]


def _finish(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_counterexample(inst, path: str, paths: Mapping[str, Sequence[str]] | None = None) -> str:
    """Triangulation of ``Y`` with the p-stratum in red and optional vertex paths."""
    Y = inst.Y
    S = Y.sset
    c = inst.coords
    fig, ax = plt.subplots(figsize=(7, 6))
    for t in S.nondeg(2):
        xs = [c[v][0] for v in S.vertex_ids(t)]
        ys = [c[v][1] for v in S.vertex_ids(t)]
        ax.fill(xs, ys, facecolor="#eaf2f8", edgecolor="#aab7b8", linewidth=0.4)
    pv = [v for v in S.nondeg(0) if Y.vertex_label(v) == "p"]
    ax.scatter([c[v][0] for v in pv], [c[v][1] for v in pv], color=_PALETTE[0], s=18, zorder=4, label="p-stratum")
    for name, vs in (paths or {}).items():
        k = 1 + list((paths or {})).index(name) % (len(_PALETTE) - 1)
        ax.plot([c[v][0] for v in vs], [c[v][1] for v in vs], color=_PALETTE[k], linewidth=1.4, label=name, zorder=3)
    for m in ("a", "b", "c", "b'", "c'"):
        ax.annotate(m, c[m], textcoords="offset points", xytext=(3, 3), fontsize=8)
    ax.set_aspect("equal")
    ax.set_title(f"collapsed model, N = {inst.N}")
    ax.legend(loc="upper right", fontsize=7, frameon=False)
    ax.set_xticks([])
    ax.set_yticks([])
    return _finish(fig, path)


def plot_stratified(X: StratSSet, path: str) -> str:
    """Vertices on a circle grouped by stratum, edges drawn as chords."""
    S = X.sset
    verts = sorted(S.nondeg(0), key=lambda v: (X.poset.index(X.vertex_label(v)), v))
    n = max(len(verts), 1)
    pos = {v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i, v in enumerate(verts)}
    colors = {p: _PALETTE[i % len(_PALETTE)] for i, p in enumerate(X.poset.elements)}
    fig, ax = plt.subplots(figsize=(5, 5))
    for t in S.nondeg(2):
        vs = S.vertex_ids(t)
        ax.fill([pos[v][0] for v in vs], [pos[v][1] for v in vs], facecolor="#d6eaf8", alpha=0.3, edgecolor="none")
    for e in S.nondeg(1):
        u, w = S.vertex_ids(e)
        ax.plot([pos[u][0], pos[w][0]], [pos[u][1], pos[w][1]], color="#7f8c8d", linewidth=0.8)
    for p in X.poset.elements:
        vs = [v for v in verts if X.vertex_label(v) == p]
        if vs:
            ax.scatter([pos[v][0] for v in vs], [pos[v][1] for v in vs], color=colors[p], s=30, zorder=3, label=p)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.legend(fontsize=7, frameon=False, loc="upper right")
    return _finish(fig, path)


def plot_entry_table(entries: Mapping[tuple[str, ...], Mapping[str, int]], path: str, title: str = "") -> str:
    """Grouped bars per flag: nondegenerate simplices, components and H1 rank."""
    names = [flag_name(I) for I in entries]
    keys = ["simplices", "pi0", "h1_rank"]
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(names) + 2), 3.5))
    w = 0.8 / len(keys)
    for j, k in enumerate(keys):
        vals = [entries[I].get(k) or 0 for I in entries]
        ax.bar([i + j * w for i in range(len(names))], vals, width=w, color=_PALETTE[j + 1], label=k)
    ax.set_xticks([i + w for i in range(len(names))])
    ax.set_xticklabels(names, rotation=45, ha="right", fontsize=7)
    ax.set_yscale("symlog")
    ax.set_title(title)
    ax.legend(fontsize=7, frameon=False)
    return _finish(fig, path)


def plot_winding(vectors: Mapping[str, Sequence[int]], path: str) -> str:
    """Winding vectors as step plots over the level index."""
    fig, ax = plt.subplots(figsize=(5, 3))
    for k, (name, v) in enumerate(vectors.items()):
        ax.step(range(1, len(v) + 1), v, where="mid", label=name, color=_PALETTE[k % len(_PALETTE)])
    ax.set_xlabel("level n")
    ax.set_ylabel("winding")
    ax.legend(fontsize=7, frameon=False)
    return _finish(fig, path)
