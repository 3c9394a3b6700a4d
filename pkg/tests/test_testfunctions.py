"""The piecewise-exponential test function and boundary-condition residuals.

Frozen oracle values were derived by hand from the branch formulas:
f(0) = 4 - 6 e^{-1}, f(1) = 2 - 4 e^{-2}, and the chain gap at 1.2 equals
e^{-0.2} - e^{-2.2}.
"""

import math

import numpy as np
import pytest

from maternlab import (
    BREAKPOINTS,
    KernelSpec,
    QuadratureError,
    bc_chain_residuals,
    bc_residuals,
    convolve_with_indicator,
    f_exact,
    f_native_norm_sq,
)

F_AT_0 = 4.0 - 6.0 * math.exp(-1.0)
F_AT_1 = 2.0 - 4.0 * math.exp(-2.0)
CHAIN_GAP_12 = math.exp(-0.2) - math.exp(-2.2)


def test_frozen_point_values():
    assert f_exact(0.0) == pytest.approx(F_AT_0, rel=1e-15)
    assert f_exact(1.0) == pytest.approx(F_AT_1, rel=1e-15)
    assert f_exact(-1.0) == pytest.approx(F_AT_1, rel=1e-15)
    assert BREAKPOINTS == (-1.0, 1.0)


def test_symmetry_in_all_orders():
    # f is even, so odd-order derivatives are odd and even orders even
    rng = np.random.default_rng(606)
    x = rng.uniform(-4, 4, size=60)
    for order, sign in ((0, 1), (1, -1), (2, 1), (3, -1)):
        assert np.allclose(
            f_exact(-x, order), sign * f_exact(x, order), rtol=1e-13, atol=1e-15
        )


def test_branches_meet_through_third_order():
    # the translate kernel is C^2 and the indicator contributes one more
    # order through its endpoints, so f is C^3 across the breakpoints
    eps = 1e-9
    for bp in BREAKPOINTS:
        for order in (0, 1, 2, 3):
            below = f_exact(bp - eps, order)
            above = f_exact(bp + eps, order)
            assert abs(below - above) < 1e-7  # continuity, one-sided offsets O(eps)
    # exact branch agreement at the breakpoints themselves
    for order in (0, 1, 2, 3):
        # evaluating exactly at bp picks one branch; compare to limits
        at = f_exact(1.0, order)
        assert abs(at - f_exact(1.0 - 1e-12, order)) < 1e-10
        assert abs(at - f_exact(1.0 + 1e-12, order)) < 1e-10


def test_derivatives_match_finite_differences():
    rng = np.random.default_rng(909)
    xs = rng.uniform(-3, 3, size=40)
    xs = xs[np.min(np.abs(xs[:, None] - np.array(BREAKPOINTS)[None, :]), axis=1) > 1e-2]
    h = 1e-6
    for order in (1, 2, 3):
        fd = (f_exact(xs + h, order - 1) - f_exact(xs - h, order - 1)) / (2 * h)
        assert np.max(np.abs(fd - f_exact(xs, order))) < 1e-7


def test_decay_in_the_far_field():
    assert f_exact(10.0) < 2e-3
    assert f_exact(30.0) < 1e-11
    assert f_exact(-30.0) < 1e-11


def test_invalid_order_rejected():
    with pytest.raises(ValueError):
        f_exact(0.5, order=4)
    with pytest.raises(ValueError):
        f_exact(0.5, order=-1)


def test_scalar_and_array_forms():
    out = f_exact(0.5)
    assert isinstance(out, float)
    arr = f_exact(np.array([0.5, 1.5]))
    assert arr.shape == (2,)
    assert arr[0] == out


def test_f_matches_independent_convolution_oracle():
    # f must equal the adaptive-quadrature convolution of the kernel with
    # the indicator of [-1, 1] at scattered points, including near kinks
    k = KernelSpec(m=2)
    rng = np.random.default_rng(515)
    xs = np.concatenate([rng.uniform(-3, 3, size=20), [-1.0, 1.0, 0.0]])
    for x in xs:
        oracle = convolve_with_indicator(k, -1.0, 1.0, x)
        assert f_exact(float(x)) == pytest.approx(oracle, abs=1e-11)


def test_native_norm_equals_integral_of_f():
    # for convolution data, ||K * chi||_K^2 = integral of f over [-1, 1];
    # scipy.integrate.quad provides the independent value
    from scipy.integrate import quad

    val, _ = quad(f_exact, -1.0, 1.0, epsabs=1e-13)
    assert f_native_norm_sq() == pytest.approx(val, rel=1e-12)
    assert f_native_norm_sq() == pytest.approx(2.0 * (1.0 + 5.0 * math.exp(-2.0)))


def test_convolve_respects_quadrature_budget():
    k = KernelSpec(m=1)  # kink at y = x exercises the panel split
    val = convolve_with_indicator(k, -1.0, 1.0, 0.25, tol=1e-12)
    # hand integral: int e^{-|0.25-y|} dy over [-1,1] = 2 - e^{-1.25} - e^{-0.75}
    exact = 2.0 - math.exp(-1.25) - math.exp(-0.75)
    assert val == pytest.approx(exact, abs=1e-11)
    with pytest.raises(QuadratureError):
        convolve_with_indicator(k, -1.0, 1.0, 0.25, tol=0.0)  # exactness demanded
    with pytest.raises(ValueError):
        convolve_with_indicator(k, 1.0, -1.0, 0.25)


def test_two_constraint_residuals_vanish_for_f_outside_support():
    for a, b in ((-1.2, 1.2), (-2.0, 3.0), (-1.0, 1.0)):
        r = bc_residuals(f_exact, a, b)
        assert len(r) == 4
        assert max(abs(v) for v in r) < 1e-13


def test_two_constraint_residuals_annihilate_pure_exponentials():
    # (1-D)^2 kills e^x at the left endpoint, (1+D)^2 kills e^{-x} at the
    # right; crossing them leaves nonzero residuals
    def grow(x, order=0):
        return math.exp(x)

    def decay(x, order=0):
        return (-1.0) ** order * math.exp(-x)

    r_grow = bc_residuals(grow, -1.5, 1.5)
    assert abs(r_grow[0]) < 1e-13 and abs(r_grow[1]) < 1e-13
    assert abs(r_grow[2]) > 1.0  # e^x is not annihilated on the right
    r_decay = bc_residuals(decay, -1.5, 1.5)
    assert abs(r_decay[2]) < 1e-13 and abs(r_decay[3]) < 1e-13
    assert abs(r_decay[0]) > 1.0


def test_chain_residuals_quantify_f_violation():
    chain = bc_chain_residuals(f_exact, -1.2, 1.2)
    assert len(chain) == 6
    # every consecutive gap has the same magnitude e^{-0.2} - e^{-2.2}
    assert all(abs(abs(g) - CHAIN_GAP_12) < 1e-13 for g in chain)
    assert CHAIN_GAP_12 == pytest.approx(0.7079276, abs=1e-7)


def test_chain_residuals_vanish_for_matched_exponentials():
    def grow(x, order=0):
        return math.exp(x)

    def decay(x, order=0):
        return (-1.0) ** order * math.exp(-x)

    left = bc_chain_residuals(grow, -1.5, 1.5)[:3]
    assert max(abs(v) for v in left) < 1e-13
    right = bc_chain_residuals(decay, -1.5, 1.5)[3:]
    assert max(abs(v) for v in right) < 1e-13
