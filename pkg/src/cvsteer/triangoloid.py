r"""The reachable region of conditional states of a two-mode squeezed thermal
state, mapped in the (mu_c, mu_sc) purity plane.

Sweeping all single-mode Gaussian measurements of mode B traces out a curved
triangle with three distinguished corners:

    red vertex: heterodyne detection, mu = mu_s = 1,
    green vertex: no readout (mu -> 0), conditional state = reduced state,
    blue vertex: homodyne detection (mu_s -> 0).

The sides are the heterodyne-to-homodyne line at mu = 1 (red), the mu_s = 1
line where the conditional state stays unsqueezed (green, mu_sc = 1
throughout), and the fixed-ratio limit mu = t mu_s with mu_s -> 0 (blue). The
blue side is a closure boundary: its points are limits of the family, not
conditional states of finite measurements.

The region overlaps the nonclassicality domain mu_sc < 2 mu_c / (1 + mu_c^2)
iff the state is steerable from B to A, and the largest nonclassical depth on
the region is attained at the blue vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conditioning import (
    ConditionalParams,
    MeasurementSpec,
    _lambda_minus_arrays,
    _params_closed,
    conditional_params_tmst,
)
from .states import TmstSpec
from .steering import sigma_steerability

__all__ = ["TriangoloidDataset", "generate", "vertex_check", "to_csv", "to_json_dict"]

CSV_HEADER = "mu,mu_s,t,mu_c,mu_sc,lambda_minus,depth,tag"

# Interior grids stay away from the unphysical mu = 0 and mu_s = 0 lines.
GRID_FLOOR = 1e-4
BLUE_T_RANGE = (1e-3, 1e3)


@dataclass(frozen=True, eq=False)
class TriangoloidDataset:
    r"""Sampled triangoloid of one state.

    Array layouts (one row per sample):
        interior: (mu, mu_s, mu_c, mu_sc, lambda_minus, depth)
        red_side / green_side / blue_side: (param, mu_c, mu_sc, lambda_minus,
            depth) where param is mu_s, mu or t respectively.
    """

    spec: TmstSpec
    grid_n: int
    interior: np.ndarray
    red_side: np.ndarray
    green_side: np.ndarray
    blue_side: np.ndarray
    vertices: dict[str, ConditionalParams]
    nonclassical_overlap: bool
    max_depth: float


def _depth_cols(mu_c, mu_sc):
    lam = _lambda_minus_arrays(mu_c, mu_sc)
    return lam, np.maximum(0.0, 0.5 - lam)


def vertex_check(spec: TmstSpec) -> dict[str, ConditionalParams]:
    """Closed-form conditional parameters at the three vertices."""
    return {
        "red": conditional_params_tmst(spec, MeasurementSpec.heterodyne()),
        "green": conditional_params_tmst(spec, MeasurementSpec.green_vertex()),
        "blue": conditional_params_tmst(spec, MeasurementSpec.homodyne()),
    }


def generate(spec: TmstSpec, grid_n: int = 100, n_blue: int = 64) -> TriangoloidDataset:
    r"""Sample the triangoloid of a two-mode squeezed thermal state.

    Args:
        spec: the state; both purities must be positive.
        grid_n: points per axis for the interior grid and per side curve.
            The grid is log spaced on [1e-4, 1] in both mu and mu_s.
        n_blue: points on the blue side, log spaced in t on [1e-3, 1e3].

    Returns:
        TriangoloidDataset with the interior grid, the three sides, the three
        vertices, the steerability overlap flag and the maximal nonclassical
        depth (attained at the blue vertex).
    """
    if grid_n < 2 or n_blue < 2:
        raise ValueError("grid_n and n_blue must be >= 2")
    a, b, _ = spec.abc()
    dp = 1.0 / (4.0 * spec.muA * spec.muB)
    axis = np.geomspace(GRID_FLOOR, 1.0, grid_n)

    mu, mu_s = np.meshgrid(axis, axis, indexing="ij")
    mu_c, mu_sc = _params_closed(a, b, dp, mu.ravel(), mu_s.ravel())
    mu_sc = np.minimum(mu_sc, 1.0)
    lam, depth = _depth_cols(mu_c, mu_sc)
    interior = np.column_stack([mu.ravel(), mu_s.ravel(), mu_c, mu_sc, lam, depth])

    def _side(mu_vals, mus_vals, param):
        side_c, side_sc = _params_closed(a, b, dp, mu_vals, mus_vals)
        side_sc = np.minimum(side_sc, 1.0)
        s_lam, s_depth = _depth_cols(side_c, side_sc)
        return np.column_stack([param, side_c, side_sc, s_lam, s_depth])

    red = _side(np.ones_like(axis), axis, axis)
    green = _side(axis, np.ones_like(axis), axis)

    t = np.geomspace(BLUE_T_RANGE[0], BLUE_T_RANGE[1], n_blue)
    x = 1e-6
    coarse = _params_closed(a, b, dp, t * x, x)
    fine = _params_closed(a, b, dp, t * (x / 2.0), x / 2.0)
    blue_c = 2.0 * fine[0] - coarse[0]
    blue_sc = np.minimum(2.0 * fine[1] - coarse[1], 1.0)
    b_lam, b_depth = _depth_cols(blue_c, blue_sc)
    blue = np.column_stack([t, blue_c, blue_sc, b_lam, b_depth])

    vertices = vertex_check(spec)
    return TriangoloidDataset(
        spec=spec,
        grid_n=grid_n,
        interior=interior,
        red_side=red,
        green_side=green,
        blue_side=blue,
        vertices=vertices,
        nonclassical_overlap=bool(sigma_steerability(spec) > 1.0),
        max_depth=vertices["blue"].depth,
    )


def _row(mu: str, mu_s: str, t: str, vals, tag: str) -> str:
    body = ",".join(repr(float(v)) for v in vals)
    return f"{mu},{mu_s},{t},{body},{tag}"


def to_csv(ds: TriangoloidDataset) -> str:
    r"""Render a dataset as CSV.

    Columns are mu,mu_s,t,mu_c,mu_sc,lambda_minus,depth,tag; parameter fields
    that do not apply to a row are left empty (blue-side rows carry only t,
    the blue vertex carries none, the green vertex is the t = 0 limit point).
    """
    lines = [CSV_HEADER]
    for r in ds.interior:
        lines.append(_row(repr(float(r[0])), repr(float(r[1])), "", r[2:], "interior"))
    for r in ds.red_side:
        lines.append(_row(repr(1.0), repr(float(r[0])), "", r[1:], "red"))
    for r in ds.green_side:
        lines.append(_row(repr(float(r[0])), repr(1.0), "", r[1:], "green"))
    for r in ds.blue_side:
        lines.append(_row("", "", repr(float(r[0])), r[1:], "blue"))
    for tag, key, mu, mu_s, t in (
        ("vertex_red", "red", repr(1.0), repr(1.0), ""),
        ("vertex_green", "green", "", "", repr(0.0)),
        ("vertex_blue", "blue", "", "", ""),
    ):
        p = ds.vertices[key]
        lines.append(
            _row(mu, mu_s, t, (p.mu_c, p.mu_sc, p.lambda_minus, p.depth), tag)
        )
    return "\n".join(lines) + "\n"


def to_json_dict(ds: TriangoloidDataset) -> dict:
    """JSON mirror of the CSV content, sectioned instead of tagged."""
    def rows(arr: np.ndarray) -> list[list[float]]:
        return [[float(v) for v in row] for row in arr]

    return {
        "spec": {"muA": ds.spec.muA, "muB": ds.spec.muB, "r": ds.spec.r},
        "grid_n": ds.grid_n,
        "columns": {
            "interior": ["mu", "mu_s", "mu_c", "mu_sc", "lambda_minus", "depth"],
            "red_side": ["mu_s", "mu_c", "mu_sc", "lambda_minus", "depth"],
            "green_side": ["mu", "mu_c", "mu_sc", "lambda_minus", "depth"],
            "blue_side": ["t", "mu_c", "mu_sc", "lambda_minus", "depth"],
        },
        "interior": rows(ds.interior),
        "red_side": rows(ds.red_side),
        "green_side": rows(ds.green_side),
        "blue_side": rows(ds.blue_side),
        "vertices": {
            key: {
                "mu_c": p.mu_c,
                "mu_sc": p.mu_sc,
                "lambda_minus": p.lambda_minus,
                "depth": p.depth,
            }
            for key, p in ds.vertices.items()
        },
        "nonclassical_overlap": ds.nonclassical_overlap,
        "max_depth": ds.max_depth,
    }
