"""Bar-chart rendering of temporal quantities with matplotlib.

One rectangle is drawn per interval (width = its length in years), which
for the usual yearly data looks like one bar per year.  SVG output is made
byte-deterministic by pinning the hash salt and stripping the date
metadata, so charts can be diffed and golden-tested.
"""

from __future__ import annotations

from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from .tq import TQ

_HASHSALT = "tqnets"


def tq_bar_figure(
    q: TQ,
    tmin: Optional[int] = None,
    tmax: Optional[int] = None,
    vmax: Optional[float] = None,
    title: str = "",
    fill: str = "red",
    width: float = 8.0,
    height: float = 2.5,
) -> Figure:
    """Build the bar chart for a quantity over the window [tmin, tmax)."""
    if tmin is None:
        tmin = q[0][0] if q else 0
    if tmax is None:
        tmax = q[-1][1] if q else tmin + 1
    if tmin >= tmax:
        raise ValueError(f"empty time window [{tmin}, {tmax})")

    fig, ax = plt.subplots(figsize=(width, height))
    for s, f, v in q:
        s, f = max(s, tmin), min(f, tmax)
        if s < f and v != 0:
            ax.bar(s, v, width=f - s, align="edge",
                   color=fill, edgecolor="black", linewidth=0.4)
    ax.set_xlim(tmin, tmax)
    if vmax is not None:
        ax.set_ylim(0, vmax)
    else:
        ax.set_ylim(bottom=0)
    ax.xaxis.get_major_locator().set_params(integer=True)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return fig


def save_chart(fig: Figure, path) -> None:
    """Write the figure to ``path``; format follows the file extension.
    SVG output is byte-deterministic for fixed inputs."""
    with plt.rc_context({"svg.hashsalt": _HASHSALT}):
        if str(path).lower().endswith(".svg"):
            fig.savefig(path, metadata={"Date": None})
        else:
            fig.savefig(path)
    plt.close(fig)


def render_tq_chart(q: TQ, path, tmin=None, tmax=None, vmax=None,
                    title: str = "", fill: str = "red") -> None:
    save_chart(tq_bar_figure(q, tmin, tmax, vmax, title, fill), path)
