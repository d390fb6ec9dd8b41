import numpy as np
import pytest

from episignal import (
    DerivativeMethod,
    central_difference_8,
    first_difference,
    frequency_domain_derivative,
    method_phase_response,
    method_spectral_response,
)
from helpers import naive_dft, naive_idft


def test_first_difference_basic():
    np.testing.assert_array_equal(first_difference([0.0, 3, 10, 10]), [3, 7, 0])
    np.testing.assert_array_equal(first_difference(np.full(10, 4.2)), np.zeros(9))
    np.testing.assert_array_equal(first_difference(np.arange(10.0)), np.ones(9))


def test_first_difference_too_short():
    with pytest.raises(ValueError):
        first_difference([1.0])


def test_central8_linear_ramp():
    out = central_difference_8(np.arange(30.0))
    assert out.shape == (22,)
    np.testing.assert_allclose(out, 1.0, atol=1e-12)


def test_central8_quartic():
    n = np.arange(20.0)
    out = central_difference_8(n**4)
    # valid region starts at n=4; index 6 is n=10 where d/dn n^4 = 4000
    assert out[6] == pytest.approx(4000.0, rel=1e-6)


def test_central8_cosine_vs_analytic():
    n = np.arange(64.0)
    x = np.cos(2 * np.pi * n / 16)
    expected = -(2 * np.pi / 16) * np.sin(2 * np.pi * n / 16)
    out = central_difference_8(x)
    err = np.abs(out - expected[4:-4])
    assert np.max(err) < 1e-4 * np.max(np.abs(expected))


def test_central8_padded_full_length():
    x = np.tile([10.0, 20, 30, 40, 50, 60, 70], 3)
    out = central_difference_8(x, pad_edges=True)
    assert out.shape == x.shape


def test_central8_too_short():
    with pytest.raises(ValueError):
        central_difference_8(np.ones(8))


def test_fd_derivative_bin_cosine():
    n = 64
    t = np.arange(n)
    x = np.cos(2 * np.pi * t * 4 / n)
    expected = -(2 * np.pi * 4 / n) * np.sin(2 * np.pi * t * 4 / n)
    np.testing.assert_allclose(frequency_domain_derivative(x), expected, atol=1e-9)


def test_fd_derivative_constant_is_zero():
    np.testing.assert_allclose(frequency_domain_derivative(np.full(31, 9.0)), 0.0, atol=1e-12)


def test_fd_derivative_matches_oracle_composition():
    # independent route: naive DFT -> Eq.-style multipliers built scalar-wise
    # -> naive inverse
    rng = np.random.default_rng(12)
    for n in (12, 13):
        x = rng.normal(size=n)
        bins = naive_dft(x)
        mult = np.empty(n, dtype=complex)
        for k in range(n):
            if k < n / 2:
                mult[k] = 2j * np.pi * k / n
            else:
                mult[k] = 2j * np.pi * (k / n - 1.0)
        if n % 2 == 0:
            mult[n // 2] = 0.0
        expected = naive_idft(mult * bins).real
        got = frequency_domain_derivative(x)
        assert np.max(np.abs(got - expected)) <= 1e-9 * (1 + np.max(np.abs(expected)))


def test_fd_derivative_commutes_with_circular_shift():
    rng = np.random.default_rng(4)
    x = rng.normal(size=40)
    lhs = np.roll(frequency_domain_derivative(x), 5)
    rhs = frequency_domain_derivative(np.roll(x, 5))
    np.testing.assert_allclose(lhs, rhs, atol=1e-10)


def test_all_methods_annihilate_constants():
    x = np.full(40, 123.0)
    assert np.max(np.abs(first_difference(x))) == 0.0
    assert np.max(np.abs(central_difference_8(x))) < 1e-12
    assert np.max(np.abs(frequency_domain_derivative(x))) < 1e-10


def test_methods_agree_on_low_frequency_sinusoid():
    n = 64
    t = np.arange(n)
    for k in (1, 3, 8):  # k <= N/8
        x = np.sin(2 * np.pi * t * k / n)
        expected = (2 * np.pi * k / n) * np.cos(2 * np.pi * t * k / n)
        fd = frequency_domain_derivative(x)
        np.testing.assert_allclose(fd, expected, atol=1e-9)
        cd = central_difference_8(x)
        assert np.max(np.abs(cd - expected[4:-4])) < 2e-3 * np.max(np.abs(expected))
        # the first difference estimates the derivative half a sample back;
        # against the midpoint derivative its error is second order in f
        fdiff = first_difference(x)
        mid = (2 * np.pi * k / n) * np.cos(2 * np.pi * (t[1:] - 0.5) * k / n)
        bound = ((np.pi * k / n) ** 2 / 6 + 1e-6) * np.max(np.abs(expected))
        assert np.max(np.abs(fdiff - mid)) <= bound


def test_spectral_response_values():
    assert method_spectral_response("spectral", 0.25)[0] == pytest.approx(np.pi / 2)
    assert method_phase_response("spectral", 0.25)[0] == pytest.approx(np.pi / 2)
    assert method_spectral_response("first", 0.0)[0] == 0.0
    assert method_spectral_response("first", 0.5)[0] == pytest.approx(2.0)


def test_spectral_response_exact_on_grid():
    f = np.linspace(0.0, 0.5, 21)
    np.testing.assert_allclose(
        method_spectral_response(DerivativeMethod.FREQUENCY_DOMAIN, f), 2 * np.pi * f
    )
    np.testing.assert_allclose(
        method_spectral_response("first", f), 2 * np.abs(np.sin(np.pi * f))
    )


def test_first_difference_phase_linear_in_frequency():
    f = np.linspace(0.01, 0.49, 25)
    phase = method_phase_response("first", f)
    np.testing.assert_allclose(phase, np.pi / 2 - np.pi * f, atol=1e-12)


def test_central8_phase_constant():
    f = np.linspace(0.01, 0.45, 20)
    phase = method_phase_response("central8", f)
    np.testing.assert_allclose(phase, np.pi / 2, atol=1e-12)


def test_response_grid_validation():
    with pytest.raises(ValueError):
        method_spectral_response("first", [0.6])
    with pytest.raises(ValueError):
        method_phase_response("spectral", [-0.1])
