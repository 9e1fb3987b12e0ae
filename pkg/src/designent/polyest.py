"""Polynomial two-sided estimates of the Tsallis integrand eta_alpha on [0, 1].

Two schemes are provided.  The "taylor" scheme truncates the binomial series of
x^alpha = x(1 + (x-1))^(alpha-1) at degree n, giving an under-estimating
polynomial sum_s a^(s) x^s and an over-estimating one sum_s b^(s) x^s.  The
"chebyshev" scheme perturbs the defining differential equation of eta_alpha by
a shifted Chebyshev polynomial T*_n (Lanczos tau method), producing flexible
coefficients that are markedly tighter for small arguments.  Both sandwiches

    sum_{s=1..n} lower_s x^s  <=  eta_alpha(x)  <=  sum_{s=0..n} upper_s x^s

hold on all of [0, 1] for every order alpha in (0, 2].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

import numpy as np

SCHEMES = ("taylor", "chebyshev")

# Orders within this distance of the right endpoint take the exact alpha -> 2
# limit of the chebyshev scheme, whose tau factor vanishes there.
ALPHA_TWO_TOL = 1e-12


@dataclass(frozen=True)
class ShiftedChebyshev:
    """Shifted Chebyshev polynomial T*_n(x) = cos(n arccos(2x - 1)) on [0, 1].

    Coefficients are exact integers; the alternating signs make floating-point
    assembly unsafe beyond n of about 15.
    """

    n: int
    coefficients: tuple[int, ...]

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for c in reversed(self.coefficients):
            out = out * x + c
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class CoefficientSet:
    """One scheme's estimate coefficients at fixed degree n and order alpha.

    lower holds the n under-estimate coefficients for powers x^1..x^n; upper
    holds the n+1 over-estimate coefficients for powers x^0..x^n.
    """

    n: int
    alpha: float
    scheme: str
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if len(self.lower) != self.n or len(self.upper) != self.n + 1:
            raise ValueError("coefficient arrays do not match degree n")


def _check_order(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha <= 2.0:
        raise ValueError(f"alpha must lie in (0, 2], got {alpha}")
    return alpha


def _check_degree(n: int) -> int:
    if int(n) != n or n < 2:
        raise ValueError(f"degree n must be an integer >= 2, got {n}")
    return int(n)


def rising_factorial(beta: float, r: int) -> float:
    """Rising factorial beta(beta+1)...(beta+r-1); the empty product at r=0 is 1."""
    if int(r) != r or r < 0:
        raise ValueError(f"r must be a nonnegative integer, got {r}")
    out = 1.0
    for j in range(int(r)):
        out *= beta + j
    return out


def _reduced_rising(alpha: float, r: int) -> float:
    # (1-alpha)^rising_r / (1-alpha) = prod_{j=2..r} (j-alpha); finite and
    # positive through alpha = 1, which removes the 1/(1-alpha) pole from the
    # coefficient formulas.
    out = 1.0
    for j in range(2, r + 1):
        out *= j - alpha
    return out


def taylor_coeffs(n: int, alpha: float) -> CoefficientSet:
    """Truncated-series estimate coefficients of degree n at order alpha.

    The under-estimate coefficients are
        a^(1) = sum_{r=1..n-1} g_r / r!,
        a^(s) = (-1)^(s-1) sum_{r>=s-1} (g_r / r!) binom(r, s-1),   s >= 2,
    with g_r = prod_{j=2..r} (j - alpha), and the over-estimate ones
        b^(0) = 1 - alpha sum_{r=1..n-1} g_r / (r+1)!,
        b^(1) = alpha a^(1) - 1,   b^(s) = (alpha/s) a^(s).
    One code path serves all alpha in (0, 2]: at alpha = 1 the products g_r
    reduce to (r-1)! (the harmonic-sum limit) and at alpha = 2 they vanish for
    r >= 2, collapsing both polynomials to x - x^2.
    """
    n = _check_degree(n)
    alpha = _check_order(alpha)
    g = [_reduced_rising(alpha, r) for r in range(n)]
    a = np.zeros(n + 1)
    for s in range(1, n + 1):
        total = 0.0
        for r in range(max(1, s - 1), n):
            total += g[r] / factorial(r) * comb(r, s - 1)
        a[s] = (-1) ** (s - 1) * total
    b = np.zeros(n + 1)
    b[0] = 1.0 - alpha * sum(g[r] / factorial(r + 1) for r in range(1, n))
    b[1] = alpha * a[1] - 1.0
    for s in range(2, n + 1):
        b[s] = alpha / s * a[s]
    return CoefficientSet(n=n, alpha=alpha, scheme="taylor", lower=a[1:], upper=b)


def chebyshev_star_coeffs(n: int) -> ShiftedChebyshev:
    """Exact integer coefficients of the shifted Chebyshev polynomial T*_n."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n}")
    n = int(n)
    coeffs = []
    for s in range(n + 1):
        # (-1)^(n+s) 2^(2s-1) [2 binom(n+s, n-s) - binom(n+s-1, n-s)]; the
        # bracket is even at s = 0, so the division below is exact.
        bracket = 2 * comb(n + s, n - s) - comb(n + s - 1, n - s)
        coeffs.append((-1) ** (n + s) * (bracket * 4 ** s) // 2)
    return ShiftedChebyshev(n=n, coefficients=tuple(coeffs))


def tau(n: int, alpha: float) -> float:
    """Normalization factor of the chebyshev scheme.

    1/tau = (-1)^n 2 n^2 - (1 - alpha) sum_{s=2..n} c^(s) / (s - alpha), where
    c^(s) are the T*_n coefficients.  The sign of tau is (-1)^n throughout
    (0, 2); tau vanishes in the alpha -> 2 limit, so tau(n, 2) returns 0.
    """
    n = _check_degree(n)
    alpha = _check_order(alpha)
    if abs(alpha - 2.0) <= ALPHA_TWO_TOL:
        return 0.0
    c = chebyshev_star_coeffs(n).coefficients
    inv = (-1) ** n * 2 * n * n
    inv -= (1.0 - alpha) * sum(c[s] / (s - alpha) for s in range(2, n + 1))
    return 1.0 / inv


def chebyshev_coeffs(n: int, alpha: float) -> CoefficientSet:
    """Flexible estimate coefficients of degree n at order alpha.

    Built from the shifted Chebyshev coefficients c^(s) and the factor tau:
        a~^(1) = tau sum_{s=2..n} c^(s)/(s - alpha),   a~^(s) = tau c^(s)/(alpha - s),
        b~^(0) = 1 - alpha sum_s a~^(s)/s,  b~^(1) = alpha a~^(1) - 1,
        b~^(s) = (alpha/s) a~^(s).
    At alpha = 2 the set takes its removable limit (both polynomials x - x^2).
    """
    n = _check_degree(n)
    alpha = _check_order(alpha)
    a = np.zeros(n + 1)
    if abs(alpha - 2.0) <= ALPHA_TWO_TOL:
        a[1], a[2] = 1.0, -1.0
    else:
        c = chebyshev_star_coeffs(n).coefficients
        t = tau(n, alpha)
        a[1] = t * sum(c[s] / (s - alpha) for s in range(2, n + 1))
        for s in range(2, n + 1):
            a[s] = t * c[s] / (alpha - s)
    b = np.zeros(n + 1)
    b[0] = 1.0 - alpha * sum(a[s] / s for s in range(1, n + 1))
    b[1] = alpha * a[1] - 1.0
    for s in range(2, n + 1):
        b[s] = alpha / s * a[s]
    return CoefficientSet(n=n, alpha=alpha, scheme="chebyshev", lower=a[1:], upper=b)


def alpha_zero_lower_coeffs(n: int) -> np.ndarray:
    """Closed-form alpha -> 0 limit of the under-estimate coefficients.

    Expansion of (1 - x)[1 - (1 - x)^(n-1)]: coefficient of x^s is
    (-1)^(s-1) binom(n, s) minus 1 at s = 1.  Useful as a reference for
    orders below about 0.05; it is a limit, not a valid under-estimate for
    positive alpha, so taylor_coeffs never routes to it.
    """
    n = _check_degree(n)
    out = np.zeros(n)
    for s in range(1, n + 1):
        out[s - 1] = (-1) ** (s - 1) * comb(n, s)
    out[0] -= 1.0
    return out


def _eval_poly(coeffs: np.ndarray, x, lowest_power: int):
    x = np.asarray(x, dtype=float)
    if np.any(x < -1e-12) or np.any(x > 1.0 + 1e-12):
        raise ValueError("evaluation point must lie in [0, 1]")
    x = np.clip(x, 0.0, 1.0)
    out = np.zeros_like(x)
    for c in reversed(coeffs):
        out = out * x + c
    for _ in range(lowest_power):
        out = out * x
    return out if out.ndim else float(out)


def eval_lower(coeffs: CoefficientSet, x):
    """Horner evaluation of the under-estimating polynomial at x in [0, 1]."""
    return _eval_poly(coeffs.lower, x, lowest_power=1)


def eval_upper(coeffs: CoefficientSet, x):
    """Horner evaluation of the over-estimating polynomial at x in [0, 1]."""
    return _eval_poly(coeffs.upper, x, lowest_power=0)
