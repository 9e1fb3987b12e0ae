"""Maximal-probability cap from a coincidence index.

If a distribution over L outcomes has n-th power sum I_n, its largest
probability cannot exceed the maximal real root of

    (1 - y)^n + (L - 1)^(n-1) y^n = (L - 1)^(n-1) I_n.

Dividing by (L-1)^(n-1) gives g(y) = c (1-y)^n + y^n with c = (L-1)^(1-n);
g is strictly increasing on [1/L, 1], so the maximal root is the unique
solution there and bisection is unconditionally safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measurements import beta_bar

FEASIBILITY_TOL = 1e-12
BISECTION_WIDTH = 1e-14
MAX_BISECTIONS = 60


def _check_shape(L: int, n: int):
    if int(L) != L or L < 2:
        raise ValueError(f"L must be an integer >= 2, got {L}")
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    return int(L), int(n)


@dataclass(frozen=True)
class UpsilonQuery:
    """Inputs of the cap equation: outcome count L, degree n, and index I_n.

    I_n must lie in the feasible interval [L^(1-n), 1]; the lower endpoint is
    attained by the uniform distribution, the upper one by a point mass.
    Values within 1e-12 of the interval are accepted and snapped.
    """

    L: int
    n: int
    I_n: float

    def __post_init__(self):
        L, n = _check_shape(self.L, self.n)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "I_n", float(self.I_n))
        floor = float(L) ** (1 - n)
        if self.I_n < floor - FEASIBILITY_TOL:
            raise ValueError(
                f"I_n={self.I_n} below the uniform value {floor}; no root >= 1/L"
            )
        if self.I_n > 1.0 + FEASIBILITY_TOL:
            raise ValueError(f"I_n={self.I_n} exceeds 1")


def max_root(q: UpsilonQuery) -> float:
    """Maximal real root of the cap equation; lies in [1/L, 1] with residual
    below 1e-12 in the normalized form."""
    L, n = q.L, q.n
    floor = float(L) ** (1 - n)
    value = min(max(q.I_n, floor), 1.0)
    # only the uniform distribution attains the floor, where the root is the
    # double root 1/L that no pointwise solver can localize; return it exactly
    if value <= floor:
        return 1.0 / L
    c = (L - 1.0) ** (1 - n)
    lo, hi = 1.0 / L, 1.0
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= BISECTION_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if c * (1.0 - mid) ** n + mid**n < value:
            lo = mid
        else:
            hi = mid
    y = 0.5 * (lo + hi)
    # one Newton polish; g'(1/L) = 0 exactly, so guard vanishing slope
    slope = n * (y ** (n - 1) - c * (1.0 - y) ** (n - 1))
    if slope > 0.0:
        y -= (c * (1.0 - y) ** n + y**n - value) / slope
    # within the flat corner the polynomial is indistinguishable from the
    # floor at double precision; bias such roots to the safe (large) side
    pad = (1.0 / L) * np.sqrt(2.0 * np.finfo(float).eps * (L - 1.0) / (n * (n - 1.0)))
    return min(max(y, 1.0 / L + pad), 1.0)


def max_root_values(L: int, n: int, values) -> np.ndarray:
    """Vectorized max_root over an array of indices I_n (shared L and n)."""
    L, n = _check_shape(L, n)
    v = np.asarray(values, dtype=float)
    floor = float(L) ** (1 - n)
    if np.any(v < floor - FEASIBILITY_TOL):
        raise ValueError("an index lies below the uniform value; no root >= 1/L")
    if np.any(v > 1.0 + FEASIBILITY_TOL):
        raise ValueError("an index exceeds 1")
    v = np.clip(v, floor, 1.0)
    c = (L - 1.0) ** (1 - n)
    lo = np.full(v.shape, 1.0 / L)
    hi = np.ones(v.shape)
    for _ in range(MAX_BISECTIONS):
        if np.max(hi - lo) <= BISECTION_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        below = c * (1.0 - mid) ** n + mid**n < v
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    y = 0.5 * (lo + hi)
    slope = n * (y ** (n - 1) - c * (1.0 - y) ** (n - 1))
    safe = slope > 0.0
    newton = np.where(safe, c * (1.0 - y) ** n + y**n - v, 0.0)
    y = y - newton / np.where(safe, slope, 1.0)
    pad = (1.0 / L) * np.sqrt(2.0 * np.finfo(float).eps * (L - 1.0) / (n * (n - 1.0)))
    y = np.where(v <= floor, 1.0 / L, np.maximum(y, 1.0 / L + pad))
    return np.clip(y, 1.0 / L, 1.0)


def upsilon_for_design(K: int, d: int, t: int, rho, M: int = 1) -> float:
    """Probability cap for a verified t-design split into M POVMs.

    The single-POVM cap is the root for (L=K, n=t) at index beta_bar^(t);
    splitting into M parts multiplies it by M, clamped to 1.  The degenerate
    t=1 equation carries no information, so the trivial cap 1 applies.
    """
    if int(M) != M or M < 1:
        raise ValueError("M must be a positive integer")
    if K % M:
        raise ValueError(f"M={M} must divide the design size K={K}")
    if int(t) != t or t < 1:
        raise ValueError("t must be a positive integer")
    if t == 1:
        return 1.0
    index = beta_bar(rho, d, K, t)
    root = max_root(UpsilonQuery(L=K, n=int(t), I_n=index))
    return min(M * root, 1.0)
