"""Two-sided entropy estimates assembled from polynomial schemes and caps.

Given power sums I^(2..n) of a distribution over L outcomes, the largest
probability is capped by the maximal root of the degree-n equation, and each
polynomial sandwich of eta_alpha turns into a pair of entropy bounds

    sum_s lower_s Y^(alpha-s) I^(s) - Y^(alpha-1) ln_alpha(Y)
        <= H_alpha <= (same with upper_s, including the s=0 term I^(0) = L).

For design POVMs the power sums are fixed by the state's moments, so the same
assembly bounds measured entropies, averaged split-POVM entropies, pure-state
candidates, quantum entropies of the state itself, and entanglement
thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designs import QuantumDesign, welch_bound
from .entropy import ALPHA_ONE_TOL, ln_alpha
from .measurements import (
    batch_moments,
    batch_sym_overlaps,
    check_distribution,
    random_states,
    split_povms,
    state_moments,
)
from .polyest import SCHEMES, chebyshev_coeffs, taylor_coeffs
from .upsilon import UpsilonQuery, max_root, max_root_values, upsilon_for_design

BRACKET_TOL = 1e-10
INDEX_SLACK = 1e-9
KAPPA_MIN = 0.5
BOUND_KINDS = ("tsallis", "renyi")


@dataclass(frozen=True)
class BoundPair:
    """Lower and upper entropy estimates with the inputs that shaped them."""

    lower: float
    upper: float
    scheme: str
    entropy_kind: str
    alpha: float
    upsilon_used: float
    n_used: int

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.entropy_kind not in BOUND_KINDS:
            raise ValueError(f"unknown entropy kind {self.entropy_kind!r}")
        if self.lower > self.upper + BRACKET_TOL:
            raise ValueError("lower bound exceeds upper bound")


def _coeffs(n: int, alpha: float, scheme: str):
    if scheme == "taylor":
        return taylor_coeffs(n, alpha)
    if scheme == "chebyshev":
        return chebyshev_coeffs(n, alpha)
    raise ValueError(f"unknown scheme {scheme!r}")


def _assemble(idx: np.ndarray, ups: float, cs, alpha: float):
    # idx = (I^(0), 1, I^(2), ..., I^(n)); powers Y^(alpha-s) for s = 0..n
    pw = ups ** (alpha - np.arange(cs.n + 1))
    tail = -(ups ** (alpha - 1.0)) * ln_alpha(ups, alpha)
    lower = float(np.dot(cs.lower, (pw * idx)[1:]) + tail)
    upper = float(np.dot(cs.upper, pw * idx) + tail)
    return lower, upper


def _feasible_indices(values, L: int) -> np.ndarray:
    # power sums of a distribution over L outcomes: nonincreasing from
    # I^(1) = 1 and each I^(s) within [L^(1-s), 1]
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or values.size < 1:
        raise ValueError("need the power sums for s = 2..n as a flat sequence")
    previous = 1.0
    for offset, value in enumerate(values):
        s = offset + 2
        floor = float(L) ** (1 - s)
        if value < floor - INDEX_SLACK or value > previous + INDEX_SLACK:
            raise ValueError(
                f"index for s={s} outside its feasible range [{floor}, {previous}]"
            )
        previous = value
    floors = float(L) ** (1 - np.arange(2, values.size + 2))
    return np.clip(values, floors, 1.0)


def _index_bounds(values, L, alpha, scheme, support):
    if int(L) != L or L < 2:
        raise ValueError("L must be an integer >= 2")
    values = _feasible_indices(values, int(L))
    n = values.size + 1
    if support is None:
        support = int(L)
    elif int(support) != support or not 1 <= support <= L:
        raise ValueError("support must be an integer in [1, L]")
    cs = _coeffs(n, alpha, scheme)
    if values[-1] <= float(L) ** (1 - n) and support == int(L):
        # a floor index pins the uniform distribution, the unique minimizer,
        # where both bounds saturate; skip the degenerate double-root solve
        level = float(ln_alpha(float(L), alpha))
        return BoundPair(
            lower=level,
            upper=level,
            scheme=scheme,
            entropy_kind="tsallis",
            alpha=float(alpha),
            upsilon_used=1.0 / L,
            n_used=n,
        )
    ups = max_root(UpsilonQuery(L=int(L), n=n, I_n=values[-1]))
    idx = np.concatenate([[float(support), 1.0], values])
    lower, upper = _assemble(idx, ups, cs, alpha)
    return BoundPair(
        lower=lower,
        upper=upper,
        scheme=scheme,
        entropy_kind="tsallis",
        alpha=float(alpha),
        upsilon_used=ups,
        n_used=n,
    )


def distribution_bounds(indices, L: int, alpha: float, scheme: str = "chebyshev", support: int | None = None) -> BoundPair:
    """Tsallis bounds from measured power sums I^(2..n) over L outcomes.

    The cap comes from the highest index; the s=0 term of the upper bound
    uses I^(0) = L unless a smaller known support is passed.
    """
    return _index_bounds(indices, L, alpha, scheme, support)


def renyi_bounds(tsallis_pair: BoundPair, alpha: float) -> BoundPair:
    """Map a Tsallis bound pair to Renyi via z -> ln(1 + (1-alpha) z)/(1-alpha).

    The map increases on its domain for alpha on either side of 1, so bound
    order is preserved; a nonpositive log argument signals inconsistent
    inputs.
    """
    if tsallis_pair.entropy_kind != "tsallis":
        raise ValueError("expected a Tsallis bound pair")
    if abs(tsallis_pair.alpha - alpha) > 1e-12:
        raise ValueError("alpha does not match the pair")

    def transform(z: float) -> float:
        if abs(alpha - 1.0) < ALPHA_ONE_TOL:
            return float(z)
        argument = 1.0 + (1.0 - alpha) * z
        if argument <= 0.0:
            raise ValueError("log argument not positive; inconsistent inputs")
        return float(np.log1p((1.0 - alpha) * z) / (1.0 - alpha))

    return BoundPair(
        lower=transform(tsallis_pair.lower),
        upper=transform(tsallis_pair.upper),
        scheme=tsallis_pair.scheme,
        entropy_kind="renyi",
        alpha=float(alpha),
        upsilon_used=tsallis_pair.upsilon_used,
        n_used=tsallis_pair.n_used,
    )


def _pure_indices(K: int, d: int, t: int) -> np.ndarray:
    s = np.arange(2, t + 1)
    weights = np.array([welch_bound(d, int(v)) for v in s])
    return float(K) ** (1 - s) * float(d) ** s * weights


def design_povm_bounds(design: QuantumDesign, rho, alpha: float, scheme: str = "chebyshev", M: int = 1, partition=None) -> BoundPair:
    """Bounds on the average Tsallis entropy of a design POVM measurement.

    M=1 bounds the single K-outcome POVM; for M > 1 the partition is
    validated to yield M identity-resolving POVMs of l = K/M effects, and the
    bound covers the mean of their M entropies.  The state enters only
    through its moments.
    """
    K, d, t = design.size, design.dimension, design.degree
    if t < 2:
        raise ValueError("design degree must be at least 2 for entropy bounds")
    if M == 1:
        ell = K
    else:
        if partition is None:
            raise ValueError("a partition is required when M > 1")
        split_povms(design, M, partition)
        ell = K // int(M)
    moments = state_moments(rho, t)
    h = np.zeros(t + 1)
    h[0] = 1.0
    for m in range(1, t + 1):
        h[m] = np.dot(moments[:m], h[m - 1 :: -1]) / m
    s = np.arange(2, t + 1)
    weights = np.array([welch_bound(d, int(v)) for v in s])
    betas = float(ell) ** (1 - s) * float(d) ** s * weights * h[2:]
    cs = _coeffs(t, alpha, scheme)
    if betas[-1] <= float(ell) ** (1 - t):
        # only the maximally mixed state reaches the floor index; there every
        # POVM of the split is uniform and both bounds saturate exactly
        level = float(ln_alpha(float(ell), alpha))
        return BoundPair(
            lower=level,
            upper=level,
            scheme=scheme,
            entropy_kind="tsallis",
            alpha=float(alpha),
            upsilon_used=1.0 / ell,
            n_used=t,
        )
    ups = upsilon_for_design(K, d, t, rho, M)
    idx = np.concatenate([[float(ell), 1.0], betas])
    lower, upper = _assemble(idx, ups, cs, alpha)
    return BoundPair(
        lower=lower,
        upper=upper,
        scheme=scheme,
        entropy_kind="tsallis",
        alpha=float(alpha),
        upsilon_used=ups,
        n_used=t,
    )


def pure_state_lower_bound(K: int, d: int, t: int, alpha: float, scheme: str = "chebyshev") -> float:
    """Lower Tsallis bound of the single POVM at any pure state.

    Pure states share one set of power sums, K^(1-s) d^s D_d^(s), so the
    value is state-independent among them; whether it also floors every
    mixed state is what state_independent_check samples for.
    """
    if int(t) != t or t < 2:
        raise ValueError("t must be an integer >= 2")
    betas = _pure_indices(K, d, int(t))
    ups = max_root(UpsilonQuery(L=int(K), n=int(t), I_n=betas[-1]))
    idx = np.concatenate([[float(K), 1.0], betas])
    cs = _coeffs(int(t), alpha, scheme)
    lower, _ = _assemble(idx, ups, cs, alpha)
    return lower


@dataclass(frozen=True)
class StateIndependenceReport:
    """Sampling evidence for the pure-state bound holding at mixed states."""

    label: str
    alpha: float
    scheme: str
    samples: int
    seed: int
    min_margin: float
    worst_state: np.ndarray
    tolerance: float = 1e-9

    @property
    def passed(self) -> bool:
        return self.min_margin >= -self.tolerance


def batch_design_bounds(design: QuantumDesign, states, alpha: float, scheme: str):
    """Single-POVM bounds for a stack of states in one vectorized pass;
    row i agrees with design_povm_bounds at states[i]."""
    K, d, t = design.size, design.dimension, design.degree
    if t < 2:
        raise ValueError("design degree must be at least 2 for entropy bounds")
    states = np.asarray(states, dtype=complex)
    moments = batch_moments(states, t)
    h = batch_sym_overlaps(moments)
    s = np.arange(2, t + 1)
    weights = np.array([welch_bound(d, int(v)) for v in s])
    betas = float(K) ** (1 - s) * float(d) ** s * weights * h[:, 1:]
    ups = max_root_values(K, t, betas[:, -1])
    cs = _coeffs(t, alpha, scheme)
    pw = ups[:, None] ** (alpha - np.arange(t + 1)[None, :])
    idx = np.concatenate(
        [np.full((len(states), 1), float(K)), np.ones((len(states), 1)), betas], axis=1
    )
    tails = -(ups ** (alpha - 1.0)) * ln_alpha(ups, alpha)
    lowers = (pw * idx)[:, 1:] @ cs.lower + tails
    uppers = (pw * idx) @ cs.upper + tails
    # floor rows are maximally mixed states: both bounds saturate exactly
    corner = betas[:, -1] <= float(K) ** (1 - t)
    if np.any(corner):
        level = float(ln_alpha(float(K), alpha))
        lowers = np.where(corner, level, lowers)
        uppers = np.where(corner, level, uppers)
    return lowers, uppers


def state_independent_check(design: QuantumDesign, alpha: float, scheme: str, samples: int = 10000, seed: int = 0) -> StateIndependenceReport:
    """Sample random mixed states and compare their lower bound with the
    pure-state candidate; a nonnegative minimum margin supports treating the
    candidate as state-independent."""
    if int(samples) != samples or samples < 1:
        raise ValueError("samples must be a positive integer")
    K, d, t = design.size, design.dimension, design.degree
    states = random_states(d, int(samples), seed)
    lowers, _ = batch_design_bounds(design, states, alpha, scheme)
    margins = lowers - pure_state_lower_bound(K, d, t, alpha, scheme)
    worst = int(np.argmin(margins))
    return StateIndependenceReport(
        label=design.label,
        alpha=float(alpha),
        scheme=scheme,
        samples=int(samples),
        seed=int(seed) if not isinstance(seed, np.random.Generator) else -1,
        min_margin=float(margins[worst]),
        worst_state=states[worst],
    )


def quantum_entropy_bounds(moments, d: int, t: int, alpha: float, scheme: str = "chebyshev", support: int | None = None) -> BoundPair:
    """Bounds on the quantum Tsallis entropy from moments tr(rho^s), s=2..t.

    The moments are the power sums of the eigenvalue distribution over at
    most d outcomes, so the index assembly applies verbatim with L = d.  The
    upper bound's s=0 term uses d unless a smaller known rank is passed as
    support; at a pure state, support=1 collapses both bounds to zero.
    """
    moments = np.asarray(moments, dtype=float)
    if moments.size + 1 != t:
        raise ValueError("expected the moments tr(rho^s) for s = 2..t")
    return _index_bounds(moments, d, alpha, scheme, support)


def separability_threshold(K: int, d: int, t: int) -> float:
    """State-independent cap on any outcome probability of the design POVM;
    measured probabilities above it witness entanglement in the convolution
    setting.  The degenerate t=1 case carries no constraint."""
    if int(t) != t or t < 1:
        raise ValueError("t must be a positive integer")
    if t == 1:
        return 1.0
    index = float(_pure_indices(int(K), int(d), int(t))[-1])
    return max_root(UpsilonQuery(L=int(K), n=int(t), I_n=index))


def entanglement_entropy_threshold(design: QuantumDesign, alpha: float, scheme: str, check: StateIndependenceReport) -> float:
    """Entropy floor for separable states: the pure-state bound, released
    only against a passed state-independence report for the same design,
    order, and scheme.  Measured entropy below it witnesses entanglement."""
    if not isinstance(check, StateIndependenceReport):
        raise ValueError("a state-independence report is required")
    if (
        check.label != design.label
        or abs(check.alpha - alpha) > 1e-12
        or check.scheme != scheme
    ):
        raise ValueError("check report does not match this configuration")
    if not check.passed:
        raise ValueError("state-independence check did not pass; threshold unavailable")
    return pure_state_lower_bound(design.size, design.dimension, design.degree, alpha, scheme)


def _check_kappa(kappa: float) -> float:
    kappa = float(kappa)
    if kappa < KAPPA_MIN - 1e-12 or kappa > 1.0 + 1e-12:
        raise ValueError("detector efficiency kappa must lie in [0.5, 1]")
    return min(max(kappa, KAPPA_MIN), 1.0)


def inefficiency_transform(p, kappa: float) -> np.ndarray:
    """Distribution seen by a detector of efficiency kappa: all clicks scaled
    by kappa plus a trailing no-click outcome of mass 1 - kappa."""
    kappa = _check_kappa(kappa)
    p = check_distribution(p)
    if kappa == 1.0:
        return p.copy()
    return np.append(kappa * p, 1.0 - kappa)


def inefficiency_index_invert(altered: float, kappa: float, s: int, outcomes: int | None = None) -> float:
    """Recover I^(s) of the ideal distribution from the distorted one:
    (altered - (1-kappa)^s) / kappa^s.  If the ideal outcome count is known,
    the result is range-checked against [outcomes^(1-s), 1]."""
    if int(s) != s or s < 1:
        raise ValueError("s must be a positive integer")
    kappa = _check_kappa(kappa)
    value = (float(altered) - (1.0 - kappa) ** int(s)) / kappa ** int(s)
    floor = 0.0 if outcomes is None else float(outcomes) ** (1 - int(s))
    if value < floor - INDEX_SLACK or value > 1.0 + INDEX_SLACK:
        raise ValueError(
            f"inverted index {value} outside [{floor}, 1]; wrong kappa for the data?"
        )
    return float(value)


def max_relative_gap(lt, ut, lch, uch) -> float:
    """Recorded figure metric: the best two-sided envelope's relative gap
    (upper - lower)/upper, maximized over the sweep."""
    lower = np.maximum(np.asarray(lt, dtype=float), np.asarray(lch, dtype=float))
    upper = np.minimum(np.asarray(ut, dtype=float), np.asarray(uch, dtype=float))
    return float(np.max((upper - lower) / upper))
