"""Finite sequence-space model of native-space interpolation.

Work in R^M with a positive nonincreasing weight vector kappa.  The model
norms are

    ||f||_0^2 = sum f_n^2          (the L2 stand-in)
    ||f||_K^2 = sum f_n^2/kappa_n  (the native-space stand-in)

and interpolation on an index subset S becomes the coordinate projection
keeping S, which is orthogonal in the K-inner product.  With
eps = max over excluded n of sqrt(kappa_n), the projection error obeys

    standard:          ||f - Pf||_0 <= eps   * ||f - Pf||_K
    superconvergence:  ||f - Pf||_0 <= eps^2 * ||f./kappa||_0

the second requiring only that v_f = f./kappa is the l2 preimage of f.
Both inequalities are exact finite-dimensional statements; the verifiers
here check them with a 1e-12 additive tolerance and report the pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

__all__ = [
    "WeightedSeqSpace",
    "sobolev_weights",
    "analytic_weights",
    "seq_project",
    "seq_native_norm_sq",
    "epsilon_excluded",
    "BoundCheck",
    "verify_standard_bound",
    "verify_superconvergence",
    "TrialReport",
    "run_trials",
]

_TOL = 1e-12


@dataclass(frozen=True)
class WeightedSeqSpace:
    """Weight vector kappa, strictly positive and stored nonincreasing."""

    kappa: np.ndarray

    def __post_init__(self):
        kap = np.array(self.kappa, dtype=float)
        if kap.ndim != 1 or kap.size == 0:
            raise ValueError("kappa must be a nonempty 1-D vector")
        if not np.all(np.isfinite(kap)) or np.any(kap <= 0):
            raise ValueError("kappa must be finite and strictly positive")
        if np.any(np.diff(kap) > 0):
            raise ValueError("kappa must be nonincreasing")
        kap.setflags(write=False)
        object.__setattr__(self, "kappa", kap)

    @property
    def M(self):
        return self.kappa.size


def sobolev_weights(M=64, order=4):
    """Polynomially decaying weights kappa_n = n^(-order), n = 1..M."""
    n = np.arange(1, M + 1, dtype=float)
    return WeightedSeqSpace(kappa=n**-order)


def analytic_weights(M=64):
    """Geometrically decaying weights kappa_n = 2^(-n), n = 1..M."""
    n = np.arange(1, M + 1)
    return WeightedSeqSpace(kappa=0.5**n)


def _as_mask(space, S):
    """Normalize an index subset to a boolean mask.

    Accepts a boolean array of length M or an iterable of zero-based
    indices.  Duplicate indices are allowed and collapse.
    """
    mask = np.zeros(space.M, dtype=bool)
    S = np.asarray(list(S) if not isinstance(S, np.ndarray) else S)
    if S.size == 0:
        return mask
    if S.dtype == bool:
        if S.shape != (space.M,):
            raise ValueError(f"boolean subset must have length {space.M}")
        return S.copy()
    idx = S.astype(int)
    if np.any(idx < 0) or np.any(idx >= space.M):
        raise ValueError("subset indices out of range")
    mask[idx] = True
    return mask


def _check_f(space, f):
    f = np.asarray(f, dtype=float)
    if f.shape != (space.M,):
        raise ValueError(f"f must have length {space.M}")
    return f


def seq_project(space, f, S):
    """Coordinate projection of f onto span{e_n : n in S}.

    Zeroing the excluded coordinates is the K-orthogonal, hence norm-minimal,
    interpolation in this model (the coordinate basis is K-orthogonal).
    """
    f = _check_f(space, f)
    return np.where(_as_mask(space, S), f, 0.0)


def seq_native_norm_sq(space, f):
    """Squared model native norm sum f_n^2 / kappa_n."""
    f = _check_f(space, f)
    return float(np.sum(f * f / space.kappa))


def epsilon_excluded(space, S):
    """eps = max over excluded n of sqrt(kappa_n); 0 when S covers everything."""
    excluded = ~_as_mask(space, S)
    if not excluded.any():
        return 0.0
    return float(np.sqrt(np.max(space.kappa[excluded])))


class BoundCheck(NamedTuple):
    lhs: float
    eps: float
    rhs: float
    holds: bool


def verify_standard_bound(space, f, S):
    """Check ||f - Pf||_0 <= eps * ||f - Pf||_K for the subset S.

    Returns (lhs, eps, rhs, holds) with holds true when the inequality is
    satisfied up to an additive 1e-12.
    """
    f = _check_f(space, f)
    mask = _as_mask(space, S)
    resid = f[~mask]
    lhs = float(np.linalg.norm(resid))
    eps = epsilon_excluded(space, mask)
    resid_k = float(np.sqrt(np.sum(resid * resid / space.kappa[~mask])))
    rhs = eps * resid_k
    return BoundCheck(lhs, eps, rhs, lhs <= rhs + _TOL)


def verify_superconvergence(space, f, S):
    """Check ||f - Pf||_0 <= eps^2 * ||f./kappa||_0 for the subset S.

    f is read as a member of the smoother class whose l2 preimage is
    v_f = f./kappa (always well defined at finite M).  Returns
    (lhs, eps, rhs, holds) with the same 1e-12 tolerance.
    """
    f = _check_f(space, f)
    mask = _as_mask(space, S)
    lhs = float(np.linalg.norm(f[~mask]))
    eps = epsilon_excluded(space, mask)
    v = f / space.kappa
    rhs = eps * eps * float(np.linalg.norm(v))
    return BoundCheck(lhs, eps, rhs, lhs <= rhs + _TOL)


@dataclass(frozen=True)
class TrialReport:
    """Outcome of a randomized verification run on one weight preset."""

    trials: int
    standard_passes: int
    super_passes: int
    sharpest_standard: float
    sharpest_super: float
    extremal_ratio: float
    counterexample: Optional[dict]

    @property
    def all_pass(self):
        return (
            self.standard_passes == self.trials
            and self.super_passes == self.trials
            and self.counterexample is None
        )


def run_trials(space, n_trials, seed):
    """Randomized verification of both inequalities on one weight preset.

    Each trial draws f = kappa .* g with standard normal g (so the implied
    density v_f = g has moderate norm and f has rapidly decaying tails) and
    an independent uniform random subset S.  Per-trial generators are
    spawned deterministically from the base seed, so results do not depend
    on evaluation order.  With n_trials = 0 the report is a vacuous pass.

    The extremal unit-coordinate case f = e_1, S = everything else is run
    as a fixed extra trial whenever n_trials > 0; its superconvergence
    ratio lhs/rhs equals 1 to machine precision (the bound is sharp).
    """
    if n_trials < 0:
        raise ValueError(f"n_trials must be >= 0, got {n_trials}")
    sharpest_std = 0.0
    sharpest_sup = 0.0
    std_pass = 0
    sup_pass = 0
    counterexample = None
    children = np.random.SeedSequence(seed).spawn(n_trials)
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        f = space.kappa * rng.standard_normal(space.M)
        mask = rng.random(space.M) < 0.5
        std = verify_standard_bound(space, f, mask)
        sup = verify_superconvergence(space, f, mask)
        std_pass += std.holds
        sup_pass += sup.holds
        if std.rhs > 0:
            sharpest_std = max(sharpest_std, std.lhs / std.rhs)
        if sup.rhs > 0:
            sharpest_sup = max(sharpest_sup, sup.lhs / sup.rhs)
        if counterexample is None and not (std.holds and sup.holds):
            counterexample = {
                "trial": i,
                "f": f,
                "subset": mask,
                "standard": std,
                "superconvergence": sup,
            }
    extremal_ratio = 1.0
    if n_trials > 0:
        f = np.zeros(space.M)
        f[0] = 1.0
        mask = np.ones(space.M, dtype=bool)
        mask[0] = False
        sup = verify_superconvergence(space, f, mask)
        extremal_ratio = sup.lhs / sup.rhs
        if counterexample is None and not sup.holds:
            counterexample = {
                "trial": "extremal",
                "f": f,
                "subset": mask,
                "standard": verify_standard_bound(space, f, mask),
                "superconvergence": sup,
            }
    return TrialReport(
        trials=n_trials,
        standard_passes=std_pass,
        super_passes=sup_pass,
        sharpest_standard=sharpest_std,
        sharpest_super=sharpest_sup,
        extremal_ratio=extremal_ratio,
        counterexample=counterexample,
    )
