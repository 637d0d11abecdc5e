import math

import numpy as np
import pytest

from brjuno import li2

PI2 = math.pi ** 2


def test_special_values():
    assert abs(li2(1.0) - PI2 / 6) < 1e-11
    assert abs(li2(-1.0) + PI2 / 12) < 1e-11
    assert abs(li2(0.5) - (PI2 / 12 - math.log(2) ** 2 / 2)) < 1e-11
    assert li2(0.0) == 0.0


def test_reflection_identity():
    # li2(x) + li2(1-x) = pi^2/6 - log(x) log(1-x) on (0, 1)
    xs = np.linspace(0.01, 0.99, 197)
    lhs = li2(xs) + li2(1 - xs)
    rhs = PI2 / 6 - np.log(xs) * np.log(1 - xs)
    assert np.max(np.abs(lhs - rhs)) < 1e-11


def test_inversion_identity_real_negative():
    # li2(x) + li2(1/x) = -pi^2/6 - log(-x)^2 / 2 for x < 0
    xs = -np.exp(np.linspace(-3, 3, 101))
    lhs = li2(xs) + li2(1 / xs)
    rhs = -PI2 / 6 - np.log(-xs) ** 2 / 2
    assert np.max(np.abs(lhs - rhs)) < 1e-11


def test_inversion_identity_complex():
    rng = np.random.default_rng(3)
    z = rng.normal(size=40) + 1j * rng.normal(size=40)
    z = z[np.abs(z) > 0.1]
    lhs = li2(z) + li2(1 / z)
    rhs = -PI2 / 6 - np.log(-z + 0j) ** 2 / 2
    assert np.max(np.abs(lhs - rhs)) < 1e-11


def test_landen_identity_complex():
    # li2(z) + li2(z/(z-1)) = -log(1-z)^2 / 2 for Re z < 1/2
    rng = np.random.default_rng(4)
    z = rng.uniform(-2, 0.4, 60) + 1j * rng.normal(0, 1, 60)
    lhs = li2(z) + li2(z / (z - 1))
    rhs = -np.log(1 - z) ** 2 / 2
    assert np.max(np.abs(lhs - rhs)) < 1e-11


def test_series_agreement_small_arguments():
    # direct power series sum_{k} z^k/k^2 at small |z|
    rng = np.random.default_rng(5)
    z = 0.3 * (rng.random(30) + 1j * rng.random(30))
    k = np.arange(1, 120)
    ref = np.array([np.sum(w ** k / k**2) for w in z])
    assert np.max(np.abs(li2(z) - ref)) < 1e-13


def test_branch_cut_value():
    # on the cut (1, inf): real part continuous across the cut, imaginary
    # part is -pi log x (conjugate of the upper-edge limit +pi log x)
    x = 2.5
    above = li2(complex(x, 1e-12))
    on_cut = li2(x)
    assert abs(on_cut.real - above.real) < 1e-9
    assert abs(on_cut.imag + math.pi * math.log(x)) < 1e-11
    assert abs(above.imag - math.pi * math.log(x)) < 1e-9


def test_vectorized_shape_and_scalar():
    a = li2(np.array([[0.1, 0.2], [0.3, 0.4]]))
    assert a.shape == (2, 2)
    assert np.isscalar(li2(0.25)) or np.ndim(li2(0.25)) == 0
