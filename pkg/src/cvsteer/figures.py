r"""Optional matplotlib rendering of triangoloid and timeline datasets.

matplotlib is imported lazily so the rest of the package works without it;
install the ``plots`` extra to use this module.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .dynamics import TimePoint
from .triangoloid import TriangoloidDataset

__all__ = ["plot_triangoloid", "plot_timeline"]


def _pyplot():
    try:
        import matplotlib
    except ImportError as exc:
        raise ImportError(
            "matplotlib is required for figure rendering; "
            "install the 'plots' extra"
        ) from exc
    matplotlib.use("Agg")
    from matplotlib import pyplot as plt

    return plt


def plot_triangoloid(ds: TriangoloidDataset, path: str) -> None:
    """Render a dataset in the (mu_c, mu_sc) plane and save it to ``path``."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    sc = ax.scatter(
        ds.interior[:, 2],
        ds.interior[:, 3],
        c=ds.interior[:, 5],
        s=4,
        cmap="viridis",
        rasterized=True,
    )
    fig.colorbar(sc, ax=ax, label="nonclassical depth")
    for arr, color, label in (
        (ds.red_side, "tab:red", "red side (mu = 1)"),
        (ds.green_side, "tab:green", "green side (mu_s = 1)"),
        (ds.blue_side, "tab:blue", "blue side (mu = t mu_s)"),
    ):
        ax.plot(arr[:, 1], arr[:, 2], color=color, lw=1.5, label=label)
    for key, marker in (("red", "o"), ("green", "s"), ("blue", "D")):
        p = ds.vertices[key]
        ax.plot([p.mu_c], [p.mu_sc], marker, color=f"tab:{key}", ms=7, mec="k")
    grid = np.linspace(1e-3, 1.0, 400)
    ax.plot(
        grid,
        2.0 * grid / (1.0 + grid * grid),
        "k--",
        lw=1.0,
        label="nonclassicality boundary",
    )
    ax.set_xlabel("conditional purity mu_c")
    ax.set_ylabel("conditional squeezing purity mu_sc")
    ax.set_title(
        f"muA={ds.spec.muA:g}, muB={ds.spec.muB:g}, r={ds.spec.r:g}"
        f"  (overlap: {'yes' if ds.nonclassical_overlap else 'no'})"
    )
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_timeline(
    points: Iterable[TimePoint], t_ns_value: float, t_ent_value: float, path: str
) -> None:
    """Plot steerability and negativity along a noisy evolution."""
    plt = _pyplot()
    points = list(points)
    t = [p.t for p in points]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(t, [p.sigma_steer for p in points], "tab:orange", label="steerability")
    ax.axhline(1.0, color="tab:orange", ls=":", lw=1.0)
    ax2 = ax.twinx()
    ax2.plot(t, [p.negativity for p in points], "tab:purple", label="negativity")
    for value, style, label in (
        (t_ns_value, "--", "nonclassicality lifetime"),
        (t_ent_value, "-.", "entanglement lifetime"),
    ):
        if math.isfinite(value):
            ax.axvline(value, color="0.4", ls=style, lw=1.0, label=label)
    ax.set_xlabel("t")
    ax.set_ylabel("steerability parameter")
    ax2.set_ylabel("logarithmic negativity")
    lines, labels = ax.get_legend_handles_labels()
    lines2, labels2 = ax2.get_legend_handles_labels()
    ax.legend(lines + lines2, labels + labels2, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
