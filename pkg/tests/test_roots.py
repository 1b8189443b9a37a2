"""Zero-spectrum tests: dispersion residuals, ordering, series expansion."""

import math

import pytest

from casimir_rect.roots import (
    eval_char_poly,
    find_zero,
    find_zeros,
    gamma_of,
    zero_series_approx,
)

PI = math.pi


def test_char_poly_trivial_zero():
    assert eval_char_poly((PI / 2) ** 2, 0.0) == pytest.approx(0.0, abs=1e-15)


def test_char_poly_degenerate_point():
    assert eval_char_poly(0.0, -1.0) == 0.0


def test_char_poly_at_tabulated_zero():
    assert abs(eval_char_poly(2.028757838**2, 1.0)) < 1e-8


def test_char_poly_imaginary_branch():
    # cosh(1) + x*sinh(1) at phi_sq = -1
    got = eval_char_poly(-1.0, -2.0)
    assert got == pytest.approx(math.cosh(1.0) - 2.0 * math.sinh(1.0), abs=1e-14)


def test_find_zero_imaginary():
    z = find_zero(1, -4.0)
    assert math.sqrt(-z.phi_sq) == pytest.approx(3.997302692, abs=1e-8)


def test_find_zero_tabulated():
    assert find_zero(3, 2.0).phi == pytest.approx(8.096163603, abs=1e-8)


def test_find_zero_exact_at_x0():
    assert find_zero(5, 0.0).phi == 9.0 * PI / 2.0


def test_find_zeros_x_neg1():
    got = [z.phi for z in find_zeros(4, -1.0)]
    expected = [0.0, 4.493409458, 7.725251837, 10.90412166]
    for g, e in zip(got, expected):
        assert g == pytest.approx(e, abs=1e-8)


def test_find_zeros_x0():
    got = [z.phi for z in find_zeros(2, 0.0)]
    assert got == [PI / 2.0, 3.0 * PI / 2.0]


def test_find_zeros_x4():
    got = [z.phi for z in find_zeros(4, 4.0)]
    expected = [2.570431560, 5.354031841, 8.302929183, 11.33482558]
    for g, e in zip(got, expected):
        assert g == pytest.approx(e, abs=1e-8)


@pytest.mark.parametrize("x", [-10.0, -4.0, -1.0, -0.3, 0.0, 0.7, 3.0, 10.0])
def test_residuals_small_over_spectrum(x):
    for z in find_zeros(50, x):
        if z.phi_sq >= 0.0:
            assert abs(eval_char_poly(z.phi_sq, x)) < 1e-12
        else:
            y = math.sqrt(-z.phi_sq)
            assert abs(y / math.tanh(y) + x) < 1e-12 * max(1.0, abs(x))


@pytest.mark.parametrize("x", [-6.0, -1.0, 0.5, 6.0])
def test_interlacing_in_mu(x):
    zs = find_zeros(30, x)
    for a, b in zip(zs, zs[1:]):
        assert a.phi_sq < b.phi_sq


@pytest.mark.parametrize("mu", [1, 2, 5, 20])
def test_monotone_in_x(mu):
    xs = [-8.0, -4.0, -1.0, 0.0, 1.0, 4.0, 8.0]
    vals = [find_zero(mu, x).phi_sq for x in xs]
    for a, b in zip(vals, vals[1:]):
        assert a < b


def test_parity_and_gamma_consistency():
    for x in (-3.0, 0.4):
        for z in find_zeros(8, x):
            assert z.sigma == (-1) ** (z.mu - 1)
            assert z.gamma >= 0.0
            assert z.gamma**2 == pytest.approx(x * x + z.phi_sq,
                                               abs=1e-12 * max(1.0, x * x))


def test_continuity_slope_at_degeneracy():
    # phi_sq(1, -1 +/- eps) -> 0 with slope 3
    for eps in (1e-5, 1e-7):
        assert find_zero(1, -1.0 + eps).phi_sq == pytest.approx(3.0 * eps, rel=1e-3)
        assert find_zero(1, -1.0 - eps).phi_sq == pytest.approx(-3.0 * eps, rel=1e-3)


def test_gamma_of_values():
    assert gamma_of(find_zero(1, -1.0), -1.0) == 1.0
    z2 = find_zero(2, -1.0)
    # 2*pi*0.89179907560 - 1 from the exponent table at x = -1
    assert gamma_of(z2, -1.0) == pytest.approx(2.0 * PI * 0.89179907560 - 1.0, abs=1e-9)
    z1 = find_zero(1, 0.0)
    assert gamma_of(z1, 0.0) == PI / 2.0


def test_gamma_of_rejects_inconsistent():
    z = find_zero(1, -4.0)  # phi_sq ~ -15.98
    with pytest.raises(ValueError):
        gamma_of(z, 0.5)


def test_series_approx_low_order():
    # order 2 reproduces F0^2 + 2x - x^2(2x+3)/(3 F0^2); the evaluated form
    # carries partial higher-order terms, hence the loose comparison
    got = zero_series_approx(4, 1.0, 2)
    f0 = 7.0 * PI / 2.0
    assert got == pytest.approx(f0 * f0 + 2.0 - 5.0 / (3.0 * f0 * f0), abs=5e-4)
    assert abs(math.sqrt(got) - 11.08553841) < 1e-4


@pytest.mark.parametrize("mu", [3, 8, 40])
@pytest.mark.parametrize("order", [0, 1, 3])
def test_series_approx_x0_exact(mu, order):
    assert zero_series_approx(mu, 0.0, order) == ((mu - 0.5) * PI) ** 2


def test_series_approx_vs_root_finder():
    got = zero_series_approx(10, -2.0, 3)
    ref = find_zero(10, -2.0).phi_sq
    assert abs(math.sqrt(got) - math.sqrt(ref)) < 1e-8


@pytest.mark.parametrize("x", [-4.0, -1.5, 2.5, 4.0])
@pytest.mark.parametrize("mu", [20, 35])
def test_series_approx_high_mu(mu, x):
    got = zero_series_approx(mu, x, 4)
    ref = find_zero(mu, x).phi_sq
    assert abs(got - ref) < 1e-10 * max(1.0, abs(ref))


def test_input_validation():
    with pytest.raises(ValueError):
        find_zero(0, 1.0)
    with pytest.raises(ValueError):
        find_zero(1, 1.0, tol=-1.0)
    with pytest.raises(ValueError):
        find_zeros(0, 1.0)
