"""Classical and quantum entropies of Tsallis, Renyi, and Shannon type.

The Tsallis entropy is built from the integrand eta_alpha(x) = (x^alpha - x)/(1 - alpha)
and the deformed logarithm ln_alpha(x) = (x^(1-alpha) - 1)/(1 - alpha).  Both reduce to
their Shannon counterparts as alpha -> 1; orders are restricted to alpha in (0, 2].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Orders within this distance of 1 are routed to the logarithmic branch,
# avoiding catastrophic cancellation in the (x^(1-alpha) - 1)/(1 - alpha) form.
ALPHA_ONE_TOL = 1e-9

ENTROPY_KINDS = ("tsallis", "renyi", "shannon")


@dataclass(frozen=True)
class EntropyOrder:
    """Entropic order alpha in (0, 2] together with the entropy family."""

    alpha: float
    kind: str = "tsallis"

    def __post_init__(self):
        if not 0.0 < self.alpha <= 2.0:
            raise ValueError(f"alpha must lie in (0, 2], got {self.alpha}")
        if self.kind not in ENTROPY_KINDS:
            raise ValueError(f"unknown entropy kind {self.kind!r}")
        if self.kind == "shannon" and abs(self.alpha - 1.0) > ALPHA_ONE_TOL:
            raise ValueError("shannon entropy requires alpha = 1")


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha <= 2.0:
        raise ValueError(f"alpha must lie in (0, 2], got {alpha}")
    return alpha


def ln_alpha(x, alpha: float):
    """Deformed logarithm of positive x.

    Returns (x^(1-alpha) - 1)/(1 - alpha), the natural logarithm when alpha
    is within 1e-9 of 1.  Accepts scalars or arrays.
    """
    alpha = _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("ln_alpha requires x > 0")
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        out = np.log(x)
    else:
        out = (x ** (1.0 - alpha) - 1.0) / (1.0 - alpha)
    return out if out.ndim else float(out)


def eta_alpha(x, alpha: float):
    """Tsallis integrand (x^alpha - x)/(1 - alpha) on [0, 1], -x ln x at alpha = 1.

    Nonnegative on its domain, zero at both endpoints; 0^alpha = 0 for alpha > 0.
    """
    alpha = _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    if np.any(x < -1e-12) or np.any(x > 1.0 + 1e-12):
        raise ValueError("eta_alpha requires x in [0, 1]")
    x = np.clip(x, 0.0, 1.0)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        safe = np.where(x > 0.0, x, 1.0)
        out = -x * np.log(safe)
    else:
        out = (x ** alpha - x) / (1.0 - alpha)
    return out if out.ndim else float(out)


def _distribution(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("expected a one-dimensional probability vector")
    if np.any(p < -1e-12):
        raise ValueError("probabilities must be nonnegative (within 1e-12)")
    total = float(p.sum())
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"probabilities sum to {total!r}, expected 1")
    return np.clip(p, 0.0, None)


def shannon(p) -> float:
    """Shannon entropy -sum p ln p in nats."""
    p = _distribution(p)
    q = p[p > 0.0]
    return float(-np.sum(q * np.log(q)))


def tsallis(p, alpha: float) -> float:
    """Tsallis alpha-entropy (sum_j p_j^alpha - 1)/(1 - alpha) = sum_j eta_alpha(p_j)."""
    alpha = _check_alpha(alpha)
    p = _distribution(p)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        q = p[p > 0.0]
        return float(-np.sum(q * np.log(q)))
    return float((np.sum(p ** alpha) - 1.0) / (1.0 - alpha))


def renyi(p, alpha: float) -> float:
    """Renyi alpha-entropy ln(sum_j p_j^alpha)/(1 - alpha), Shannon at alpha = 1."""
    alpha = _check_alpha(alpha)
    p = _distribution(p)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        q = p[p > 0.0]
        return float(-np.sum(q * np.log(q)))
    return float(np.log(np.sum(p ** alpha)) / (1.0 - alpha))


def _eigenvalue_distribution(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12:
        raise ValueError("density matrix must be Hermitian within 1e-12")
    if abs(np.trace(rho).real - 1.0) > 1e-12 or abs(np.trace(rho).imag) > 1e-12:
        raise ValueError("density matrix must have unit trace within 1e-12")
    ev = np.linalg.eigvalsh(rho)
    if np.any(ev < -1e-12):
        raise ValueError("density matrix has negative eigenvalues")
    ev = np.clip(ev, 0.0, None)
    return ev / ev.sum()


def quantum_tsallis(rho, alpha: float) -> float:
    """Tsallis alpha-entropy of a density matrix; von Neumann entropy at alpha = 1."""
    return tsallis(_eigenvalue_distribution(rho), alpha)


def quantum_renyi(rho, alpha: float) -> float:
    """Renyi alpha-entropy of a density matrix; von Neumann entropy at alpha = 1."""
    return renyi(_eigenvalue_distribution(rho), alpha)
