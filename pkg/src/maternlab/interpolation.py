"""Norm-minimal interpolation with kernel translates.

Among all native-space functions matching the data, the interpolant
s(x) = sum_j a_j K(|x - x_j|) with A a = values (A the Gram matrix of
translates) has minimal native norm; its residual is orthogonal to every
translate at the nodes.  The solve goes through an unpivoted Cholesky
factorization with an explicit conditioning floor, so failure is a typed
error naming the pivot instead of a silently regularized answer.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import ConditioningError, ConditioningWarning
from .kernels import kernel_eval

__all__ = [
    "CONDITIONING_FLOOR",
    "JITTER_SCALE",
    "NodeSet",
    "Interpolant",
    "assemble_gram",
    "interpolate",
    "evaluate",
    "native_norm_sq",
    "native_error_norm",
]

# Both scale with kernel_eval(k, 0), the common magnitude of Gram diagonals.
CONDITIONING_FLOOR = 1e-13
JITTER_SCALE = 1e-12


@dataclass(frozen=True)
class NodeSet:
    """Strictly increasing interpolation nodes inside [-C, C].

    Parameters
    ----------
    points : array_like
        Node coordinates, strictly increasing.
    halfwidth : float
        Domain half-width C; all nodes must lie in [-C, C].
    """

    points: np.ndarray
    halfwidth: float

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 1 or pts.size == 0:
            raise ValueError("nodes must form a nonempty 1-D vector")
        if not np.all(np.isfinite(pts)):
            raise ValueError("nodes must be finite")
        if pts.size > 1 and np.any(np.diff(pts) <= 0):
            raise ValueError("nodes must be strictly increasing (distinct)")
        C = float(self.halfwidth)
        if not (np.isfinite(C) and C > 0):
            raise ValueError(f"halfwidth must be positive, got {self.halfwidth!r}")
        object.__setattr__(self, "halfwidth", C)
        if pts[0] < -C - 1e-12 or pts[-1] > C + 1e-12:
            raise ValueError("nodes fall outside [-C, C]")

    def __len__(self):
        return self.points.size

    @property
    def spacing(self):
        """Largest gap between consecutive nodes; 2C/(N-1) for equidistant sets."""
        if self.points.size == 1:
            return 2.0 * self.halfwidth
        return float(np.max(np.diff(self.points)))


@dataclass(frozen=True)
class Interpolant:
    """A solved interpolant: kernel, nodes, coefficients, and the data values."""

    kernel: object
    nodes: NodeSet
    coefficients: np.ndarray
    values: np.ndarray

    def __call__(self, points):
        return evaluate(self, points)


def assemble_gram(k, X):
    """Gram matrix A_ij = kernel_eval(k, |x_i - x_j|) of translates at X."""
    pts = X.points
    return kernel_eval(k, np.abs(pts[:, None] - pts[None, :]))


def _cholesky_floor(A, floor):
    # Unpivoted lower Cholesky.  The pivot checked is the diagonal remainder
    # before its square root; it is what the recursion subtracts, so a value
    # at or below the floor means the matrix is numerically not PD at scale.
    n = A.shape[0]
    L = np.zeros_like(A)
    for j in range(n):
        d = A[j, j] - L[j, :j] @ L[j, :j]
        if d <= floor:
            raise ConditioningError(j, d, floor)
        L[j, j] = math.sqrt(d)
        if j + 1 < n:
            L[j + 1 :, j] = (A[j + 1 :, j] - L[j + 1 :, :j] @ L[j, :j]) / L[j, j]
    return L


def interpolate(k, X, values, jitter=False):
    """Solve for the norm-minimal interpolant of the data at X.

    Parameters
    ----------
    k : KernelSpec
    X : NodeSet
    values : array_like
        Data, one value per node.
    jitter : bool, optional
        When True, 1e-12 * K(0) is added to the Gram diagonal before
        factorization and a ConditioningWarning records the change.  Off by
        default: a hard ConditioningError beats silent smoothing.

    Raises
    ------
    ConditioningError
        When a factorization pivot falls to or below 1e-13 * K(0); the error
        carries the offending pivot index.
    """
    vals = np.array(values, dtype=float)
    if vals.shape != (len(X),):
        raise ValueError(f"expected {len(X)} values, got shape {vals.shape}")
    if not np.all(np.isfinite(vals)):
        raise ValueError("values must be finite")
    A = assemble_gram(k, X)
    k0 = kernel_eval(k, 0.0)
    if jitter:
        A = A + (JITTER_SCALE * k0) * np.eye(len(X))
        warnings.warn(
            f"added diagonal jitter {JITTER_SCALE * k0:.3e} to the Gram matrix",
            ConditioningWarning,
            stacklevel=2,
        )
    L = _cholesky_floor(A, CONDITIONING_FLOOR * k0)
    y = solve_triangular(L, vals, lower=True)
    a = solve_triangular(L.T, y, lower=False)
    vals.setflags(write=False)
    a.setflags(write=False)
    return Interpolant(kernel=k, nodes=X, coefficients=a, values=vals)


def evaluate(s, points):
    """Evaluate s(x) = sum_j a_j K(|x - x_j|) at the given points."""
    pts = np.asarray(points, dtype=float)
    flat = np.atleast_1d(pts)
    dist = np.abs(flat[:, None] - s.nodes.points[None, :])
    out = kernel_eval(s.kernel, dist) @ s.coefficients
    return float(out[0]) if pts.ndim == 0 else out


def native_norm_sq(s):
    """Squared native norm a^T A a of the interpolant, computed as a . values."""
    return max(float(s.coefficients @ s.values), 0.0)


def native_error_norm(f_norm_sq, s):
    """Native-norm distance ||f - s|| from the Pythagoras split.

    For f in the native space with squared norm ``f_norm_sq``, orthogonality
    of the interpolation residual gives ||f - s||^2 = ||f||^2 - ||s||^2.
    Returns sqrt(max(0, f_norm_sq - native_norm_sq(s))).

    Raises
    ------
    ValueError
        When native_norm_sq(s) exceeds f_norm_sq by more than 1e-9, which
        signals a wrong f_norm_sq or an f outside the native space.
    """
    if f_norm_sq < 0:
        raise ValueError(f"f_norm_sq must be nonnegative, got {f_norm_sq!r}")
    diff = f_norm_sq - native_norm_sq(s)
    if diff < -1e-9:
        raise ValueError(
            f"interpolant norm exceeds f_norm_sq by {-diff:.3e}: "
            "wrong norm value, or f is not a member of the native space"
        )
    return math.sqrt(max(diff, 0.0))
