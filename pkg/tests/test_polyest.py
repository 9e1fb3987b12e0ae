"""Polynomial under/over-estimates of the Tsallis integrand eta_alpha."""

import numpy as np
import pytest

from designent import polyest as pst
from designent.entropy import eta_alpha


def cheb_star_recurrence(n):
    """Shifted Chebyshev coefficients via T*_{k+1} = (4x-2) T*_k - T*_{k-1}."""
    prev, cur = [1], [-1, 2]
    for _ in range(n - 1):
        nxt = [0] * (len(cur) + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] += 4 * c
            nxt[i] -= 2 * c
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return tuple(cur)


def test_chebyshev_star_matches_recurrence():
    for n in range(2, 21):
        assert pst.chebyshev_star_coeffs(n).coefficients == cheb_star_recurrence(n)


def test_chebyshev_star_known_rows():
    assert pst.chebyshev_star_coeffs(2).coefficients == (1, -8, 8)
    assert pst.chebyshev_star_coeffs(3).coefficients == (-1, 18, -48, 32)
    for n in range(2, 13):
        coeffs = pst.chebyshev_star_coeffs(n).coefficients
        assert coeffs[0] == (-1) ** n
        assert coeffs[1] == (-1) ** (n + 1) * 2 * n * n


def test_chebyshev_star_evaluation():
    x = np.linspace(0.0, 1.0, 517)
    for n, tol in ((2, 1e-12), (3, 1e-12), (7, 1e-10), (12, 1e-7)):
        # monomial-basis Horner loses digits as the integer coefficients grow
        poly = pst.chebyshev_star_coeffs(n)
        expected = np.cos(n * np.arccos(np.clip(2.0 * x - 1.0, -1.0, 1.0)))
        np.testing.assert_allclose(poly(x), expected, atol=tol)
        assert poly(0.37) == pytest.approx(float(np.polyval(poly.coefficients[::-1], 0.37)))


def test_sine_ratio_inequality():
    # |sin(n theta)| <= n sin(theta), the equioscillation scale factor
    theta = np.linspace(0.0, np.pi, 2001)
    for n in range(2, 13):
        assert np.all(np.abs(np.sin(n * theta)) <= n * np.sin(theta) + 1e-12)


def test_rising_factorial():
    assert pst.rising_factorial(0.5, 3) == pytest.approx(1.875, abs=1e-15)
    assert pst.rising_factorial(3.0, 0) == 1.0
    assert pst.rising_factorial(-1.0, 1) == -1.0
    assert pst.rising_factorial(-1.0, 2) == 0.0
    with pytest.raises(ValueError):
        pst.rising_factorial(1.0, -1)


def test_taylor_degree_two_closed_form():
    for alpha in (0.2, 0.7, 1.0, 1.5, 2.0):
        cs = pst.taylor_coeffs(2, alpha)
        np.testing.assert_allclose(cs.lower, [1.0, -1.0], atol=1e-14)
        np.testing.assert_allclose(
            cs.upper, [1.0 - alpha / 2.0, alpha - 1.0, -alpha / 2.0], atol=1e-14
        )


def test_taylor_alpha_one_harmonic_values():
    # the removable point alpha = 1 lands on harmonic-number coefficients
    for n in (2, 3, 5, 9):
        harm = sum(1.0 / r for r in range(1, n))
        cs = pst.taylor_coeffs(n, 1.0)
        assert cs.lower[0] == pytest.approx(harm, abs=1e-13)
        assert cs.upper[0] == pytest.approx(1.0 / n, abs=1e-13)
        for alpha in (1.0 - 1e-7, 1.0 + 1e-7):
            near = pst.taylor_coeffs(n, alpha)
            assert near.lower[0] == pytest.approx(harm, abs=1e-5)
            assert near.upper[0] == pytest.approx(1.0 / n, abs=1e-5)


def test_coefficients_sum_to_zero_at_one():
    # both estimates saturate eta_alpha(1) = 0, so each coefficient row sums to 0
    for fn in (pst.taylor_coeffs, pst.chebyshev_coeffs):
        for n in (2, 3, 5, 8):
            for alpha in (0.1, 0.7, 1.0, 1.6, 2.0):
                cs = fn(n, alpha)
                assert abs(cs.lower.sum()) < 1e-11
                assert abs(cs.upper.sum()) < 1e-11


def test_tau_values():
    assert pst.tau(2, 0.5) == pytest.approx(3.0 / 16.0, abs=1e-15)
    for n in range(2, 11):
        assert pst.tau(n, 1.0) == pytest.approx((-1.0) ** n / (2.0 * n * n), abs=1e-14)
        assert pst.tau(n, 2.0) == 0.0


def test_tau_sign_and_saturation():
    for n in range(2, 9):
        for alpha in np.arange(0.05, 2.0, 0.05):
            assert (-1.0) ** n * pst.tau(n, float(alpha)) >= 0.0
        # near alpha = 2 the normalization degenerates like eps / c_n^(2)
        c2 = pst.chebyshev_star_coeffs(n).coefficients[2]
        eps = 1e-9
        assert pst.tau(n, 2.0 - eps) == pytest.approx(eps / c2, rel=1e-6)


def test_chebyshev_degree_two_equals_taylor():
    for alpha in (0.1, 0.5, 1.0, 1.5, 1.9, 2.0):
        tay = pst.taylor_coeffs(2, alpha)
        che = pst.chebyshev_coeffs(2, alpha)
        np.testing.assert_allclose(che.lower, tay.lower, atol=1e-13)
        np.testing.assert_allclose(che.upper, tay.upper, atol=1e-13)


def test_alpha_two_saturates_collision_integrand():
    x = np.linspace(0.0, 1.0, 801)
    for fn in (pst.taylor_coeffs, pst.chebyshev_coeffs):
        for n in (2, 4, 6):
            cs = fn(n, 2.0)
            np.testing.assert_allclose(pst.eval_lower(cs, x), x - x * x, atol=1e-12)
            np.testing.assert_allclose(pst.eval_upper(cs, x), x - x * x, atol=1e-12)


def test_sandwich_on_grid():
    x = np.linspace(0.0, 1.0, 2001)
    for fn in (pst.taylor_coeffs, pst.chebyshev_coeffs):
        for n in (2, 3, 5, 8):
            for alpha in (0.1, 0.5, 0.9, 1.0, 1.3, 1.9):
                cs = fn(n, alpha)
                eta = eta_alpha(x, alpha)
                assert np.all(pst.eval_lower(cs, x) <= eta + 1e-10)
                assert np.all(eta <= pst.eval_upper(cs, x) + 1e-10)


def test_scaled_deviation_is_monotone():
    # (eta - lower)/x^alpha and (upper - eta)/x^alpha never increase in x,
    # which is what pins the worst case at the largest probability
    x = np.linspace(1e-6, 1.0, 2001)
    for fn in (pst.taylor_coeffs, pst.chebyshev_coeffs):
        for n in (2, 5, 8):
            for alpha in (0.3, 1.0, 1.7):
                cs = fn(n, alpha)
                eta = eta_alpha(x, alpha)
                scale = x**alpha
                for g in ((eta - pst.eval_lower(cs, x)) / scale,
                          (pst.eval_upper(cs, x) - eta) / scale):
                    slack = 1e-9 * (1.0 + float(np.abs(g).max()))
                    assert np.all(np.diff(g) <= slack)


def test_alpha_zero_lower_coeffs_expansion():
    from numpy.polynomial import polynomial as P

    for n in range(2, 9):
        # (1 - x) - (1 - x)^n, coefficients for powers x^1..x^n
        expect = P.polysub([1.0, -1.0], P.polypow([1.0, -1.0], n))
        np.testing.assert_allclose(pst.alpha_zero_lower_coeffs(n), expect[1:], atol=1e-12)
    x = np.linspace(0.0, 1.0, 501)
    for n in (2, 3, 4):
        coeffs = pst.alpha_zero_lower_coeffs(n)
        limit = x * np.polyval(coeffs[::-1], x)
        tiny = pst.taylor_coeffs(n, 1e-7)
        np.testing.assert_allclose(pst.eval_lower(tiny, x), limit, atol=1e-5)


def test_upper_flattens_toward_one_minus_x_at_small_alpha():
    x = np.linspace(0.0, 1.0, 501)
    for n in (2, 3, 4):
        cs = pst.taylor_coeffs(n, 1e-7)
        np.testing.assert_allclose(pst.eval_upper(cs, x), 1.0 - x, atol=1e-6)


def test_eval_domain_and_shapes():
    cs = pst.taylor_coeffs(3, 0.7)
    assert isinstance(pst.eval_lower(cs, 0.5), float)
    assert pst.eval_lower(cs, np.array([0.2, 0.8])).shape == (2,)
    with pytest.raises(ValueError):
        pst.eval_lower(cs, 1.5)
    with pytest.raises(ValueError):
        pst.eval_upper(cs, -0.5)
    assert pst.eval_upper(cs, 1.0 + 1e-13) == pytest.approx(0.0, abs=1e-12)


def test_validation_errors():
    with pytest.raises(ValueError):
        pst.taylor_coeffs(1, 0.5)
    with pytest.raises(ValueError):
        pst.taylor_coeffs(3, 0.0)
    with pytest.raises(ValueError):
        pst.chebyshev_coeffs(3, 2.1)
    with pytest.raises(ValueError):
        pst.CoefficientSet(2, 0.5, "taylor", np.ones(3), np.ones(3))
    with pytest.raises(ValueError):
        pst.CoefficientSet(2, 0.5, "pade", np.ones(2), np.ones(3))
