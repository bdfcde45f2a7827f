"""Figures written next to the TSV/transcript outputs of the CLI."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .enumeration import ChainCensus  # noqa: E402
from .relations import PropertyGraph  # noqa: E402

__all__ = ["plot_census", "plot_relations", "plot_verdicts"]

# grid positions (column, row) following the usual two-row layout
_LAYOUT = {
    "SCC": (0, 1), "HC": (1, 1), "DMVP": (2, 1), "CJEP": (3, 1), "SSCC": (4, 1),
    "DIP": (0, 0), "AP": (1, 0), "SDPRP": (2, 0), "DPRP": (3, 0), "PRP": (4, 0),
    "subSCC": (0, 2), "DP": (1, 2),
}

_STYLE = {
    "implies": dict(color="black", linestyle="-", arrowstyle="-|>"),
    "equivalent": dict(color="black", linestyle="-", arrowstyle="<|-|>"),
    "does-not-imply": dict(color="tab:red", linestyle="--", arrowstyle="-|>"),
    "open": dict(color="tab:blue", linestyle=":", arrowstyle="-|>"),
}


def plot_census(census: ChainCensus, path) -> Path:
    """Contractivity histogram and flag counts for one census."""
    path = Path(path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.2))
    hist = Counter(m.contractivity for m in census.meta)
    ks = sorted(hist)
    ax1.bar([str(k) for k in ks], [hist[k] for k in ks], color="0.4")
    ax1.set_xlabel("contractivity index")
    ax1.set_ylabel("chains")
    ax1.yaxis.set_major_locator(MaxNLocator(integer=True))
    flags = {
        "SMTL": sum(m.smtl for m in census.meta),
        "involutive": sum(m.involutive for m in census.meta),
        "simple": sum(m.simple for m in census.meta),
        "SI": sum(m.si for m in census.meta),
    }
    ax2.barh(list(flags), list(flags.values()), color="0.6")
    ax2.axvline(census.count, color="black", linewidth=0.8)
    ax2.set_xlabel(f"chains (of {census.count})")
    fig.suptitle(f"MTL-chains of order {census.order}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_relations(graph: PropertyGraph, path) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(10, 4.5))
    for node, (x, y) in _LAYOUT.items():
        if node in graph.nodes:
            ax.text(x, y, node, ha="center", va="center", fontsize=11,
                    bbox=dict(boxstyle="round,pad=0.3", fc="white", ec="0.3"))
    for k, e in enumerate(graph.edges):
        (x0, y0), (x1, y1) = _LAYOUT[e.source], _LAYOUT[e.target]
        style = _STYLE[e.kind]
        # alternate curvature so opposite edges between a pair stay apart
        rad = 0.15 if k % 2 else -0.15
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle=style["arrowstyle"], color=style["color"],
                                    linestyle=style["linestyle"], shrinkA=16, shrinkB=16,
                                    connectionstyle=f"arc3,rad={rad}"))
    handles = [plt.Line2D([], [], color=s["color"], linestyle=s["linestyle"], label=kind)
               for kind, s in _STYLE.items()]
    ax.legend(handles=handles, loc="upper right", fontsize=8, frameon=False)
    ax.set_xlim(-0.6, 4.6)
    ax.set_ylim(-0.5, 2.5)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_verdicts(verdicts, path) -> Path:
    """One bar per scenario: number of checked facts, coloured by verdict."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(verdicts) + 1))
    names = [v.scenario for v in verdicts]
    facts = [sum(1 for line in v.transcript if line.startswith("[")) for v in verdicts]
    colors = ["tab:green" if v.passed else "tab:red" for v in verdicts]
    ax.barh(names, facts, color=colors)
    ax.invert_yaxis()
    ax.set_xlabel("checked facts")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
