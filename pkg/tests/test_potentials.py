"""Closed-form potential identities, limits, and the SUSY decomposition."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from susystep.errors import DomainError
from susystep.potentials import (
    HyperbolicParams,
    PotentialKind,
    PotentialSpec,
    potential,
    potential_antiderivative,
    potential_hyperbolic,
    shape_invariance_check,
    superpotential,
    superpotential_derivative,
    v_minus,
    v_plus,
    v_step,
)

SETTINGS = settings(max_examples=100, deadline=None, derandomize=True)

MS = st.floats(0.1, 5.0)
XS = st.floats(-50.0, 50.0)


# ----------------------------------------------------------- superpotential

def test_superpotential_at_origin():
    assert math.isclose(float(superpotential(0.0, 1.0)), -1.0 / math.sqrt(2.0), rel_tol=1e-15)


def test_superpotential_right_limit():
    # W -> -m as x -> +infinity
    assert abs(float(superpotential(40.0, 1.0)) + 1.0) < 1e-15


def test_superpotential_left_limit_from_below():
    # W -> 0 through negative values
    w = float(superpotential(-40.0, 1.0))
    assert -1e-8 < w < 0.0


def test_superpotential_rejects_zero_coupling():
    with pytest.raises(DomainError):
        superpotential(0.0, 0.0)


@given(x=XS, m=MS)
@SETTINGS
def test_superpotential_never_crosses_zero(x, m):
    assert float(superpotential(x, m)) < 0.0
    assert float(superpotential(x, -m)) > 0.0


# --------------------------------------------------------------- potentials

def test_partner_values_at_origin():
    spec = PotentialSpec.plus(1.0)
    assert math.isclose(float(potential(spec, 0.0)), 0.5 - 0.5 * 2.0**-1.5, rel_tol=1e-15)
    # hyperbolic form gives the same number written differently
    assert math.isclose(float(potential_hyperbolic(spec, 0.0)), 0.5 - 2.0**-2.5, rel_tol=1e-15)
    assert math.isclose(float(potential_hyperbolic(PotentialSpec.minus(1.0), 0.0)), 0.5 + 2.0**-2.5, rel_tol=1e-15)


def test_partner_right_limit_is_m_squared():
    for m in (0.5, 1.0, 2.0):
        for spec in (PotentialSpec.plus(m), PotentialSpec.minus(m)):
            assert abs(float(potential(spec, 45.0)) - m * m) < 1e-14 * m * m + 1e-15


def test_partner_left_limits_signed():
    # V+ -> 0 from below, V- -> 0 from above
    vp = float(potential(PotentialSpec.plus(1.0), -35.0))
    vm = float(potential(PotentialSpec.minus(1.0), -35.0))
    assert -1e-7 < vp < 0.0
    assert 0.0 < vm < 1e-7


def test_step_at_origin_is_half_height():
    assert float(potential(PotentialSpec.step(1.0, 1.0), 0.0)) == 0.5


def test_step_asymptotes():
    spec = PotentialSpec.step(2.5, 0.7)
    assert abs(float(potential(spec, 60.0)) - 2.5) < 1e-12
    assert abs(float(potential(spec, -60.0))) < 1e-12


def test_spec_validation():
    with pytest.raises(DomainError):
        PotentialSpec.plus(0.0)
    with pytest.raises(DomainError):
        PotentialSpec.minus(-1.0)
    with pytest.raises(DomainError):
        PotentialSpec.step(1.0, 0.0)


def test_hyperbolic_params_construction():
    assert HyperbolicParams.from_m(2.0).mu == 2.0 / math.sqrt(2.0)


@given(x=XS, m=MS)
@SETTINGS
def test_hyperbolic_equals_exponential_form(x, m):
    for spec in (PotentialSpec.plus(m), PotentialSpec.minus(m)):
        a = float(potential(spec, x))
        b = float(potential_hyperbolic(spec, x))
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_hyperbolic_rejects_step():
    with pytest.raises(DomainError):
        potential_hyperbolic(PotentialSpec.step(1.0), 0.0)


def test_ces_coupling_constraint():
    # the two structural coefficients are locked: (1/4) m^2 - (m/2)^2 = 0
    for m in (0.3, 1.0, 2.7, 11.0):
        assert 0.25 * m * m - (0.5 * m) ** 2 == 0.0
        assert 0.25 * m * m - (-0.5 * m) ** 2 == 0.0


# ------------------------------------------------------- SUSY decomposition

def test_susy_decomposition_residual():
    # V+/- = W^2 +/- dW/dx with the derivative taken numerically
    xs = np.linspace(-20.0, 20.0, 401)
    h = 1e-5
    for m in (0.5, 1.0, 2.0):
        dw = (superpotential(xs + h, m) - superpotential(xs - h, m)) / (2 * h)
        w2 = superpotential(xs, m) ** 2
        for spec, sign in ((PotentialSpec.plus(m), 1.0), (PotentialSpec.minus(m), -1.0)):
            res = np.abs(potential(spec, xs) - (w2 + sign * dw))
            scale = np.max(np.abs(potential(spec, xs))) + m * m
            assert float(np.max(res)) / scale < 1e-7


def test_superpotential_derivative_closed_form():
    xs = np.linspace(-15.0, 15.0, 101)
    h = 1e-6
    num = (superpotential(xs + h, 1.3) - superpotential(xs - h, 1.3)) / (2 * h)
    assert float(np.max(np.abs(num - superpotential_derivative(xs, 1.3)))) < 1e-9


def test_exponential_approach_to_right_asymptote():
    # |V(x) - m^2| <= C e^-x for x > 10, with C fitted at x = 12
    xs = np.linspace(10.0, 30.0, 41)
    for spec in (PotentialSpec.plus(1.0), PotentialSpec.minus(1.0)):
        gap = np.abs(np.asarray(potential(spec, xs)) - 1.0)
        c_fit = float(np.abs(potential(spec, 12.0) - 1.0)) * math.exp(12.0)
        assert np.all(gap <= 1.05 * c_fit * np.exp(-xs))


# ----------------------------------------------------------- antiderivative

def test_antiderivative_at_origin():
    got = float(potential_antiderivative(PotentialSpec.plus(1.0), 0.0))
    assert math.isclose(got, math.log(2.0) - 1.0 / math.sqrt(2.0), rel_tol=1e-14)


def test_antiderivative_differentiates_back():
    xs = np.linspace(-25.0, 25.0, 201)
    h = 1e-5
    for spec in (PotentialSpec.plus(1.7), PotentialSpec.minus(0.6)):
        grad = (potential_antiderivative(spec, xs + h) - potential_antiderivative(spec, xs - h)) / (2 * h)
        assert float(np.max(np.abs(grad - potential(spec, xs)))) < 1e-8


def test_antiderivative_diverges():
    # grows like m^2 x, hence the full-line integral of V diverges;
    # (at x = 50 the value is ~49 for m = 1, so probe far enough out)
    f = potential_antiderivative
    spec = PotentialSpec.plus(1.0)
    assert float(f(spec, 2000.0)) > 1e3
    assert float(f(spec, 50.0)) > float(f(spec, 10.0)) > float(f(spec, 0.0))


def test_antiderivative_rejects_step():
    with pytest.raises(DomainError):
        potential_antiderivative(PotentialSpec.step(1.0), 0.0)


# --------------------------------------------------------- shape invariance

def test_shape_invariance_examples():
    assert shape_invariance_check(1.0, 0.0) == 0.0
    assert abs(shape_invariance_check(2.5, -3.1)) < 1e-14
    assert abs(shape_invariance_check(1.0, 10.0)) < 1e-14


@given(m=st.floats(0.05, 8.0), x=XS)
@SETTINGS
def test_shape_invariance_property(m, x):
    assert abs(float(shape_invariance_check(m, x))) < 1e-14
    assert abs(float(shape_invariance_check(-m, x))) < 1e-14


def test_shape_invariance_rejects_zero():
    with pytest.raises(DomainError):
        shape_invariance_check(0.0, 1.0)


def test_vectorized_evaluation_matches_scalars():
    xs = np.array([-3.0, 0.0, 2.5])
    arr = v_plus(xs, 1.2)
    assert arr.shape == xs.shape
    for i, x in enumerate(xs):
        assert arr[i] == float(v_plus(float(x), 1.2))
    assert np.allclose(v_step(xs, 1.0, 1.0), 0.5 * (1 + np.tanh(xs / 2.0)))
    assert v_minus(0.0, 1.0) == pytest.approx(0.5 + 2.0**-2.5)


def test_extreme_arguments_do_not_overflow():
    for x in (-745.0, -300.0, 300.0, 709.0):
        for f in (lambda t: v_plus(t, 1.0), lambda t: v_minus(t, 1.0), lambda t: superpotential(t, 1.0)):
            val = float(f(x))
            assert math.isfinite(val)
