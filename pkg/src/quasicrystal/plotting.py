"""Render a component as a layered drawing with matplotlib."""

from __future__ import annotations

from collections import deque

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .qgraph import Component  # noqa: E402


def _levels(c: Component) -> list[int]:
    # Depth below the root: a lowering edge goes one level down.
    adj: dict[int, list[tuple[int, int]]] = {k: [] for k in range(len(c))}
    for a, b, _ in c.edges:
        adj[a].append((b, 1))
        adj[b].append((a, -1))
    level = {0: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, d in adj[u]:
            if v not in level:
                level[v] = level[u] + d
                queue.append(v)
    low = min(level.values())
    return [level[k] - low for k in range(len(c))]


def _label(word) -> str:
    return " ".join(f"{-x}̅" if isinstance(x, int) and x < 0 else str(x) for x in word) or "ε"


def plot_component(c: Component, path: str, title: str | None = None) -> None:
    levels = _levels(c)
    rows: dict[int, list[int]] = {}
    for k, lv in enumerate(levels):
        rows.setdefault(lv, []).append(k)
    pos = {}
    for lv, members in rows.items():
        for j, k in enumerate(members):
            pos[k] = (j - (len(members) - 1) / 2, -lv)

    width = max(4.0, 1.6 * max(len(m) for m in rows.values()))
    height = max(3.0, 1.1 * (len(rows) + 1))
    fig, ax = plt.subplots(figsize=(width, height))
    colours = plt.get_cmap("tab10")

    for a, b, i in c.edges:
        arrow = FancyArrowPatch(pos[a], pos[b], arrowstyle="-|>", mutation_scale=12,
                                shrinkA=14, shrinkB=14, color=colours(i - 1), lw=1.2)
        ax.add_patch(arrow)
        mx, my = (pos[a][0] + pos[b][0]) / 2, (pos[a][1] + pos[b][1]) / 2
        ax.text(mx + 0.06, my, str(i), color=colours(i - 1), fontsize=8)
    loop_count: dict[int, int] = {}
    for v, i in c.loops:
        n = loop_count.get(v, 0)
        loop_count[v] = n + 1
        x, y = pos[v]
        ax.text(x - 0.35 - 0.15 * n, y + 0.18, f"↺{i}", color=colours(i - 1), fontsize=8)
    for k, w in enumerate(c.vertices):
        x, y = pos[k]
        ax.text(x, y, _label(w), ha="center", va="center", fontsize=9,
                bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="0.4"))

    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    ax.set_xlim(min(xs) - 1, max(xs) + 1)
    ax.set_ylim(min(ys) - 0.7, max(ys) + 0.7)
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
