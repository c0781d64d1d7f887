"""Figures written next to reports."""

from __future__ import annotations

from typing import List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .decide import PropertyIIReport  # noqa: E402


def plot_restriction_sums(rep: PropertyIIReport, path, title: str = ""):
    """Heat map of trivial-character multiplicities on primitive cyclic subgroups."""
    prim = rep.primitive_classes
    data = np.array([[float(v.rational()) for v in row] for row in rep.restriction_sums], dtype=float)
    if prim:
        # divide each column by the order of its cyclic subgroup
        orders = np.array([max(1.0, data[0, j]) for j in range(len(prim))])
        data = data / orders
    fig, ax = plt.subplots(figsize=(max(4, 0.35 * len(prim) + 2), max(3, 0.28 * rep.nclasses + 1.5)))
    im = ax.imshow(data, cmap="viridis", aspect="auto")
    ax.set_xticks(range(len(prim)))
    ax.set_xticklabels([str(c + 1) for c in prim], fontsize=7)
    ax.set_yticks(range(rep.nclasses))
    labels = [f"X.{r + 1}" + ("*" if r in rep.imprimitive_irreps else "") for r in range(rep.nclasses)]
    ax.set_yticklabels(labels, fontsize=7)
    for r in rep.imprimitive_irreps:
        ax.axhline(r, color="red", lw=0.8, alpha=0.6)
    ax.set_xlabel("primitive class")
    ax.set_ylabel("irreducible character")
    ax.set_title(title or f"order {rep.order}: trivial multiplicity on <g>", fontsize=9)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_census(entries: List, path):
    """Stacked bars: groups per order, split by verdict."""
    ok = [e for e in entries if e.error is None]
    orders = sorted({e.order for e in ok})
    yes = [sum(1 for e in ok if e.order == o and e.has_property_ii) for o in orders]
    no = [sum(1 for e in ok if e.order == o and not e.has_property_ii) for o in orders]
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(orders) + 2), 3.2))
    x = np.arange(len(orders))
    ax.bar(x, no, color="0.75", label="no Property II")
    ax.bar(x, yes, bottom=no, color="tab:red", label="Property II")
    ax.set_xticks(x)
    ax.set_xticklabels([str(o) for o in orders])
    ax.set_xlabel("group order")
    ax.set_ylabel("groups")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
