"""Convergence-rate studies and interior-bound experiments.

A rate study interpolates a reference function on a doubling ladder of
equidistant node sets in [-C, C], measures global and interior RMS errors
on a fine grid, optionally tracks the native-norm error through the
Pythagoras split, and fits log-log slopes.  Fits use the finest half of the
usable levels (plus one) to approximate the asymptotic regime; errors below
1e-13 are dropped first, since the Gram conditioning floor makes anything
smaller meaningless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConditioningError, InsufficientDataError
from .interpolation import (
    NodeSet,
    evaluate,
    interpolate,
    native_error_norm,
)
from .kernels import tail_energy
from .testfunctions import f_exact, f_native_norm_sq

__all__ = [
    "ERROR_FLOOR",
    "RateRow",
    "RateStudy",
    "equidistant_nodes",
    "rms_error",
    "fit_rate",
    "run_rate_study",
    "native_decay_study",
    "bad_part_sup_bound",
]

ERROR_FLOOR = 1e-13


def equidistant_nodes(C, N):
    """N equidistant nodes from -C to +C inclusive, spacing 2C/(N-1)."""
    if N < 2:
        raise ValueError(f"need N >= 2 nodes, got {N}")
    return NodeSet(points=np.linspace(-C, C, N), halfwidth=C)


def rms_error(reference, s, grid):
    """Root-mean-square of reference(x) - s(x) over the grid points."""
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    diff = np.asarray(reference(grid), dtype=float) - evaluate(s, grid)
    return float(np.sqrt(np.mean(diff * diff)))


def _usable(e):
    e = np.asarray(e, dtype=float)
    return np.isfinite(e) & (e >= ERROR_FLOOR)


def _finest_count(levels):
    # finest half of the levels, plus one; never more than all of them
    return min(levels, math.ceil(levels / 2) + 1)


def fit_rate(h, e, all_levels=False):
    """Least-squares slope of log e against log h.

    Levels with e below 1e-13 are dropped.  By default the fit runs over
    the ceil(L/2) + 1 finest (smallest h) of the L usable levels; pass
    all_levels=True for the full-ladder slope.

    Raises
    ------
    InsufficientDataError
        When fewer than two usable levels remain.
    """
    h = np.asarray(h, dtype=float)
    e = np.asarray(e, dtype=float)
    if h.shape != e.shape or h.ndim != 1:
        raise ValueError("h and e must be matching 1-D vectors")
    if np.any(h <= 0):
        raise ValueError("h must be positive")
    keep = _usable(e)
    hs = h[keep]
    es = e[keep]
    if hs.size < 2:
        raise InsufficientDataError(
            f"rate fit needs >= 2 usable levels, have {hs.size} "
            f"(errors below {ERROR_FLOOR:g} are dropped)"
        )
    if not all_levels:
        order = np.argsort(hs)
        take = order[: _finest_count(hs.size)]
        hs = hs[take]
        es = es[take]
    slope, _ = np.polyfit(np.log(hs), np.log(es), 1)
    return float(slope)


@dataclass(frozen=True)
class RateRow:
    """One ladder level: node count, spacing, and error measurements."""

    N: int
    h: float
    rms_global: float
    rms_interior: float
    native_err: float
    maxabs_global: float
    maxabs_interior: float


@dataclass(frozen=True)
class RateStudy:
    """A completed convergence study with fitted rates.

    ``global_rate``/``interior_rate`` use the finest-levels fit;
    the ``*_all`` variants fit every usable level.  All four are None when
    the ladder leaves fewer than two usable levels.
    """

    kernel: object
    C: float
    interior_margin: float
    node_counts: tuple
    grid_size: int
    rows: tuple
    global_rate: Optional[float]
    interior_rate: Optional[float]
    global_rate_all: Optional[float]
    interior_rate_all: Optional[float]

    @property
    def hs(self):
        return np.array([row.h for row in self.rows])


def run_rate_study(
    kernel,
    C,
    interior_margin,
    node_counts,
    grid_size,
    reference,
    f_norm_sq=None,
    jitter=False,
):
    """Interpolate the reference on each ladder level and measure errors.

    Parameters
    ----------
    kernel : KernelSpec
    C : float
        Domain half-width; nodes and evaluation grid live in [-C, C].
    interior_margin : float
        The interior window is |x| <= C - interior_margin.
    node_counts : sequence of int
        Strictly increasing node ladder, each >= 2.
    grid_size : int
        Evaluation grid resolution; must be >= 10x the largest node count.
    reference : callable
        Vectorized function being interpolated.
    f_norm_sq : float, optional
        Exact squared native norm of the reference; enables the native_err
        column (left as NaN otherwise).
    jitter : bool, optional
        Forwarded to the interpolation solver.

    Raises
    ------
    ConditioningError
        From the solver, re-raised with the offending node count attached.
    """
    C = float(C)
    margin = float(interior_margin)
    if not (np.isfinite(C) and C > 0):
        raise ValueError(f"C must be positive, got {C!r}")
    if not (0 <= margin < C):
        raise ValueError(f"interior margin must lie in [0, C), got {margin!r}")
    counts = [int(n) for n in node_counts]
    if len(counts) == 0 or any(n < 2 for n in counts):
        raise ValueError("node_counts must be nonempty with every count >= 2")
    if any(b <= a for a, b in zip(counts, counts[1:])):
        raise ValueError("node_counts must be strictly increasing")
    if grid_size < 10 * max(counts):
        raise ValueError(
            f"grid_size {grid_size} too coarse for N = {max(counts)}; need >= 10x"
        )
    grid = np.linspace(-C, C, grid_size)
    interior = np.abs(grid) <= C - margin
    f_grid = np.asarray(reference(grid), dtype=float)
    rows = []
    for N in counts:
        nodes = equidistant_nodes(C, N)
        try:
            s = interpolate(kernel, nodes, reference(nodes.points), jitter=jitter)
        except ConditioningError as exc:
            raise ConditioningError(
                exc.pivot_index, exc.pivot_value, exc.floor, detail=f"at N={N}"
            ) from exc
        diff = np.abs(f_grid - evaluate(s, grid))
        nerr = math.nan
        if f_norm_sq is not None:
            nerr = native_error_norm(f_norm_sq, s)
        rows.append(
            RateRow(
                N=N,
                h=2.0 * C / (N - 1),
                rms_global=float(np.sqrt(np.mean(diff**2))),
                rms_interior=float(np.sqrt(np.mean(diff[interior] ** 2))),
                native_err=nerr,
                maxabs_global=float(diff.max()),
                maxabs_interior=float(diff[interior].max()),
            )
        )
    hs = np.array([row.h for row in rows])
    fits = {}
    for name, errs in (
        ("global", np.array([row.rms_global for row in rows])),
        ("interior", np.array([row.rms_interior for row in rows])),
    ):
        for suffix, full in (("", False), ("_all", True)):
            try:
                fits[name + suffix] = fit_rate(hs, errs, all_levels=full)
            except InsufficientDataError:
                fits[name + suffix] = None
    return RateStudy(
        kernel=kernel,
        C=C,
        interior_margin=margin,
        node_counts=tuple(counts),
        grid_size=int(grid_size),
        rows=tuple(rows),
        global_rate=fits["global"],
        interior_rate=fits["interior"],
        global_rate_all=fits["global_all"],
        interior_rate_all=fits["interior_all"],
    )


def native_decay_study(
    kernel,
    C,
    interior_margin,
    node_counts,
    grid_size,
    reference=f_exact,
    f_norm_sq=None,
):
    """Fitted exponent of the native-norm error against the node count N.

    Runs the rate study and fits log(native_err) vs log(N) over the finest
    ceil(L/2) + 1 usable levels.  Levels with native_err below 1e-13 are
    dropped; if fewer than two usable levels remain (for instance when the
    reference is a kernel-translate combination reproduced exactly at every
    level), the study is degenerate and NaN is returned.
    """
    if f_norm_sq is None:
        f_norm_sq = f_native_norm_sq()
    study = run_rate_study(
        kernel, C, interior_margin, node_counts, grid_size, reference, f_norm_sq
    )
    N = np.array([row.N for row in study.rows], dtype=float)
    e = np.array([row.native_err for row in study.rows])
    keep = _usable(e)
    N = N[keep]
    e = e[keep]
    if N.size < 2:
        return math.nan
    order = np.argsort(N)[::-1]
    take = order[: _finest_count(N.size)]
    slope, _ = np.polyfit(np.log(N[take]), np.log(e[take]), 1)
    return float(slope)


def bad_part_sup_bound(k, v_outside_norm, R):
    """Sup bound for the part of a convolution driven from outside the domain.

    For f2 = K * v with v supported outside the working interval and
    ||v||_2 = v_outside_norm, Cauchy-Schwarz gives
    |f2(x)| <= v_outside_norm * sqrt(tail_energy(k, R)) at every x whose
    distance to the support-carrying complement is at least R.
    """
    if v_outside_norm < 0:
        raise ValueError(f"v_outside_norm must be nonnegative, got {v_outside_norm!r}")
    return v_outside_norm * math.sqrt(tail_energy(k, R))
