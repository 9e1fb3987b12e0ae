"""POVMs built from designs, their outcome statistics, and state moments.

A design of K vectors yields a single POVM with effects (d/K)|phi_k><phi_k|,
or a collection of M POVMs when the vectors can be partitioned into groups
that each resolve the identity.  For verified t-designs the power sums of the
outcome probabilities are fixed by the state's spectrum alone; those values
are the beta-bar quantities computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designs import QuantumDesign, welch_bound

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_TOL = 1e-12
COMPLETENESS_TOL = 1e-10
PROBABILITY_SUM_TOL = 1e-10
SUPPORT_TOL = 1e-12


def check_state(rho) -> np.ndarray:
    """Validate a density matrix: Hermitian, PSD, unit trace (all within
    1e-12); returns it as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("state must be a square matrix")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise ValueError("state must be Hermitian within 1e-12")
    if abs(np.trace(rho).real - 1.0) > TRACE_TOL:
        raise ValueError("state must have unit trace within 1e-12")
    if np.min(np.linalg.eigvalsh(rho)) < -EIGENVALUE_TOL:
        raise ValueError("state must be positive semidefinite within 1e-12")
    return rho


def _state_eigenvalues(rho) -> np.ndarray:
    # validation and spectrum in one diagonalization pass
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("state must be a square matrix")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise ValueError("state must be Hermitian within 1e-12")
    evals = np.linalg.eigvalsh(rho)
    if abs(np.sum(evals) - 1.0) > TRACE_TOL:
        raise ValueError("state must have unit trace within 1e-12")
    if evals[0] < -EIGENVALUE_TOL:
        raise ValueError("state must be positive semidefinite within 1e-12")
    return np.clip(evals, 0.0, None)


def check_distribution(p) -> np.ndarray:
    """Validate outcome probabilities: entries >= -1e-12 (clipped to 0) and
    unit sum within 1e-10."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1:
        raise ValueError("distribution must be a flat sequence")
    if np.min(p) < -EIGENVALUE_TOL:
        raise ValueError("negative probability beyond round-off")
    if abs(np.sum(p) - 1.0) > PROBABILITY_SUM_TOL:
        raise ValueError("probabilities must sum to 1 within 1e-10")
    return np.clip(p, 0.0, 1.0)


@dataclass(frozen=True, eq=False)
class Povm:
    """Rank-one POVM whose effects are (d/l)|phi><phi| over design vectors.

    grouping is "single" for the full-design POVM or "m/M" for the m-th
    member of an M-fold split.
    """

    effects: np.ndarray
    vectors: np.ndarray
    label: str = ""
    grouping: str = "single"

    def __post_init__(self):
        E = np.asarray(self.effects, dtype=complex)
        V = np.asarray(self.vectors, dtype=complex)
        if V.ndim != 2 or E.shape != (V.shape[0],) + (V.shape[1],) * 2:
            raise ValueError("effects must be one d x d matrix per vector")
        d = V.shape[1]
        identity_gap = np.max(np.abs(E.sum(axis=0) - np.eye(d)))
        if identity_gap > COMPLETENESS_TOL:
            raise ValueError(
                f"effects do not resolve the identity (gap {identity_gap:.3g}); "
                "the source vectors do not form a 1-design"
            )
        # each effect must be the stated scaled projector
        weight = d / V.shape[0]
        rebuilt = weight * V[:, :, None] * V.conj()[:, None, :]
        if np.max(np.abs(E - rebuilt)) > COMPLETENESS_TOL:
            raise ValueError("effects must equal (d/l)|phi><phi| for the vectors")
        object.__setattr__(self, "effects", E)
        object.__setattr__(self, "vectors", V)

    @property
    def outcomes(self) -> int:
        return self.vectors.shape[0]

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]


def _povm_from_vectors(V: np.ndarray, label: str, grouping: str) -> Povm:
    d = V.shape[1]
    weight = d / V.shape[0]
    effects = weight * V[:, :, None] * V.conj()[:, None, :]
    return Povm(effects=effects, vectors=V, label=label, grouping=grouping)


def single_povm(design: QuantumDesign) -> Povm:
    """The K-outcome POVM with effects (d/K)|phi_k><phi_k|."""
    return _povm_from_vectors(design.vectors, design.label, "single")


def split_povms(design: QuantumDesign, M: int, partition) -> list[Povm]:
    """Split a design into M POVMs of l = K/M effects each.

    partition lists M disjoint index groups covering all K vectors.  Each
    group must resolve the identity on its own; not every grouping of a
    design does, so this is validated rather than assumed.
    """
    K = design.size
    if int(M) != M or M < 1:
        raise ValueError("M must be a positive integer")
    if K % M != 0:
        raise ValueError(f"K={K} is not divisible by M={M}")
    ell = K // M
    groups = [list(g) for g in partition]
    if len(groups) != M or any(len(g) != ell for g in groups):
        raise ValueError(f"partition must hold {M} groups of {ell} indices")
    flat = sorted(i for g in groups for i in g)
    if flat != list(range(K)):
        raise ValueError("partition must cover every vector index exactly once")
    povms = []
    for m, group in enumerate(groups):
        V = design.vectors[np.asarray(group, dtype=int)]
        try:
            povms.append(_povm_from_vectors(V, design.label, f"{m + 1}/{M}"))
        except ValueError:
            raise ValueError(
                f"group {m + 1} of the partition does not resolve the identity"
            ) from None
    return povms


def probabilities(povm: Povm, rho) -> np.ndarray:
    """Outcome probabilities p_j = tr(E_j rho) = (d/l) <phi_j|rho|phi_j>."""
    rho = check_state(rho)
    if rho.shape[0] != povm.dimension:
        raise ValueError("state dimension does not match the POVM")
    V = povm.vectors
    p = np.einsum("kd,de,ke->k", V.conj(), rho, V).real
    p *= povm.dimension / povm.outcomes
    p = check_distribution(p)
    total = p.sum()
    if total:
        p = p / total
    return p


def coincidence_index(p, s: int) -> float:
    """Power sum I^(s) = sum_j p_j^s; s=0 counts outcomes above 1e-12."""
    if int(s) != s or s < 0:
        raise ValueError("s must be a nonnegative integer")
    p = check_distribution(p)
    if s == 0:
        return float(np.count_nonzero(p > SUPPORT_TOL))
    return float(np.sum(p ** int(s)))


def state_moments(rho, s_max: int) -> np.ndarray:
    """Moments (tr rho, tr rho^2, ..., tr rho^s_max) from the spectrum."""
    if int(s_max) != s_max or s_max < 1:
        raise ValueError("s_max must be a positive integer")
    evals = _state_eigenvalues(rho)
    powers = evals[None, :] ** np.arange(1, int(s_max) + 1)[:, None]
    return powers.sum(axis=1)


def _complete_homogeneous(power_sums, s: int) -> float:
    # Newton-Girard: m h_m = sum_{k=1..m} p_k h_{m-k}
    h = np.zeros(s + 1)
    h[0] = 1.0
    for m in range(1, s + 1):
        h[m] = np.dot(power_sums[:m], h[m - 1 :: -1]) / m
    return float(h[s])


def sym_overlap(rho, s: int) -> float:
    """Overlap of s state copies with the symmetric subspace.

    Equals the complete homogeneous symmetric polynomial h_s of the
    eigenvalues, evaluated from the moments by the Newton-Girard recursion.
    """
    if int(s) != s or s < 1:
        raise ValueError("s must be a positive integer")
    return _complete_homogeneous(state_moments(rho, s), int(s))


def beta_bar(rho, d: int, ell: int, s: int) -> float:
    """Design-determined coincidence value l^(1-s) d^s D_d^(s) h_s(rho).

    For a verified t-design split into identity-resolving groups of l
    effects, this equals the group-averaged I^(s) of the outcome
    probabilities for every s <= t.  s=0 returns l and s=1 returns 1.
    """
    if int(s) != s or s < 0:
        raise ValueError("s must be a nonnegative integer")
    if int(ell) != ell or ell < 1:
        raise ValueError("ell must be a positive integer")
    if s == 0:
        return float(ell)
    if s == 1:
        return 1.0
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[0] != d:
        raise ValueError("state dimension does not match d")
    scale = float(ell) ** (1 - s) * float(d) ** s * welch_bound(d, s)
    return scale * sym_overlap(rho, s)


def random_states(d: int, count: int, seed=None) -> np.ndarray:
    """Sample density matrices: flat-simplex eigenvalues rotated by a
    Haar-random basis; deterministic under a fixed seed."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    evals = rng.dirichlet(np.ones(d), size=count)
    Z = rng.normal(size=(count, d, d)) + 1j * rng.normal(size=(count, d, d))
    Q, R = np.linalg.qr(Z)
    phases = np.diagonal(R, axis1=1, axis2=2).copy()
    phases /= np.abs(phases)
    Q = Q * phases[:, None, :]
    return (Q * evals[:, None, :]) @ Q.conj().transpose(0, 2, 1)


def batch_moments(rhos, s_max: int) -> np.ndarray:
    """Moments tr(rho^s), s = 1..s_max, for a stack of states; rows follow
    the stacking order."""
    evals = np.clip(np.linalg.eigvalsh(np.asarray(rhos, dtype=complex)), 0.0, None)
    return np.stack([np.sum(evals**s, axis=-1) for s in range(1, int(s_max) + 1)], axis=-1)


def batch_sym_overlaps(moments) -> np.ndarray:
    """Complete homogeneous symmetric polynomials h_1..h_s for each row of a
    (states, s) moment array."""
    moments = np.asarray(moments, dtype=float)
    count, s_max = moments.shape
    h = np.zeros((count, s_max + 1))
    h[:, 0] = 1.0
    for m in range(1, s_max + 1):
        acc = np.zeros(count)
        for k in range(1, m + 1):
            acc += moments[:, k - 1] * h[:, m - k]
        h[:, m] = acc / m
    return h[:, 1:]
