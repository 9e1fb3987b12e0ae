"""Complex projective t-designs: catalog, loading, verification, and search.

A t-design is a set of K unit vectors in C^d whose overlap moments up to
order t reproduce the uniform average over pure states.  Candidate quality is
measured by frame potentials; a family is an s-design exactly when its s-th
frame potential meets the Welch bound 1/binom(d+s-1, s).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import comb
from pathlib import Path

import numpy as np

CATALOG_NAMES = ("octahedron", "icosahedron", "snub_cube_deformed")
CATALOG_ENV = "DESIGNENT_CATALOG"

NORM_TOL = 1e-12
VERIFY_TOL = 1e-9

_BUILTIN_CACHE: dict = {}


@dataclass(frozen=True, eq=False)
class QuantumDesign:
    """K unit vectors in C^d with a claimed design degree.

    Construction checks shapes and normalization only; whether the family
    actually is a t-design is established separately by verify_design.
    """

    dimension: int
    vectors: np.ndarray
    degree: int
    label: str = ""

    def __post_init__(self):
        V = np.asarray(self.vectors, dtype=complex)
        if V.ndim != 2 or V.shape[1] != self.dimension:
            raise ValueError("vectors must form a K x d array matching dimension")
        if V.shape[0] < self.dimension:
            raise ValueError("a design needs at least d vectors")
        if np.any(np.abs(np.linalg.norm(V, axis=1) - 1.0) > NORM_TOL):
            raise ValueError("design vectors must be unit within 1e-12")
        if int(self.degree) < 1:
            raise ValueError("degree must be a positive integer")
        object.__setattr__(self, "vectors", V)
        object.__setattr__(self, "dimension", int(self.dimension))
        object.__setattr__(self, "degree", int(self.degree))

    @property
    def size(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True)
class DesignVerificationReport:
    """Per-order frame-potential deviations and the overall verdict."""

    rows: tuple
    passed: bool
    tol: float

    def lines(self) -> list[str]:
        out = []
        for s, phi, target, dev in self.rows:
            mark = "ok" if dev <= self.tol else "FAIL"
            out.append(
                f"s={s} potential={phi:.17g} bound={target:.17g} "
                f"deviation={dev:.17g} {mark}"
            )
        out.append(f"result: {'pass' if self.passed else 'fail'} tol={self.tol:.17g}")
        return out


def welch_bound(d: int, s: int) -> float:
    """Minimal possible frame potential 1/binom(d+s-1, s); equality holds
    exactly for s-designs."""
    if int(d) != d or d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    if int(s) != s or s < 0:
        raise ValueError(f"s must be a nonnegative integer, got {s}")
    return 1.0 / comb(int(d) + int(s) - 1, int(s))


def frame_potential(design: QuantumDesign, s: int) -> float:
    """Average 2s-th overlap moment (1/K^2) sum_jk |<phi_j|phi_k>|^(2s)."""
    if int(s) != s or s < 1:
        raise ValueError(f"s must be a positive integer, got {s}")
    gram = design.vectors @ design.vectors.conj().T
    overlaps = np.abs(gram) ** 2
    return float(np.sum(overlaps ** int(s)) / design.size**2)


def verify_design(design: QuantumDesign, t: int, tol: float = VERIFY_TOL) -> DesignVerificationReport:
    """Check the design property at every order s = 1..t."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    rows = []
    for s in range(1, int(t) + 1):
        phi = frame_potential(design, s)
        target = welch_bound(design.dimension, s)
        rows.append((s, phi, target, abs(phi - target)))
    passed = all(dev <= tol for _, _, _, dev in rows)
    return DesignVerificationReport(rows=tuple(rows), passed=passed, tol=float(tol))


def _fix_phases(V: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    # global phase per vector: first nonvanishing amplitude made real >= 0
    V = np.array(V, dtype=complex)
    for row in V:
        idx = np.flatnonzero(np.abs(row) > tol)
        if idx.size:
            a = row[idx[0]]
            row *= a.conjugate() / abs(a)
    return V


def bloch_to_state(bloch) -> np.ndarray:
    """Qubit state with the given unit Bloch vector as its spin direction.

    Phase convention: the first nonvanishing amplitude is real nonnegative,
    so conversions are deterministic and file round-trips are stable.
    """
    b = np.asarray(bloch, dtype=float)
    if b.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    if abs(np.linalg.norm(b) - 1.0) > 1e-9:
        raise ValueError("Bloch vector must be unit length")
    theta = np.arctan2(np.hypot(b[0], b[1]), b[2])
    phi = np.arctan2(b[1], b[0])
    state = np.array([np.cos(theta / 2), np.sin(theta / 2) * np.exp(1j * phi)])
    state[np.abs(state) < 1e-15] = 0.0
    state /= np.linalg.norm(state)
    return _fix_phases(state[None, :])[0]


def state_to_bloch(state) -> np.ndarray:
    """Spin direction <sigma> of a qubit unit vector; inverse of bloch_to_state."""
    v = np.asarray(state, dtype=complex)
    if v.shape != (2,):
        raise ValueError("state must have two amplitudes")
    cross = v[0].conjugate() * v[1]
    return np.array([2 * cross.real, 2 * cross.imag, abs(v[0]) ** 2 - abs(v[1]) ** 2])


def load_design(source) -> QuantumDesign:
    """Parse a design document (path or already-parsed mapping).

    The document carries `dimension`, `degree`, optional `label`, and vectors
    either as complex pairs under `vectors` ([[re, im], ...] per vector) or,
    for dimension 2, as Bloch triples under `bloch`.  Vectors are normalized;
    the design property is NOT checked here, run verify_design for that.
    """
    if isinstance(source, (str, Path)):
        doc = json.loads(Path(source).read_text())
        default_label = Path(source).stem
    elif isinstance(source, dict):
        doc = source
        default_label = "loaded"
    else:
        raise ValueError("source must be a path or a parsed mapping")
    if not isinstance(doc, dict):
        raise ValueError("design document must be a mapping")
    try:
        dimension = int(doc["dimension"])
        degree = int(doc["degree"])
    except KeyError as exc:
        raise ValueError(f"design document missing field {exc}") from None
    label = str(doc.get("label", default_label))

    if "bloch" in doc:
        if dimension != 2:
            raise ValueError("Bloch triples are only meaningful for dimension 2")
        rows = []
        for b in doc["bloch"]:
            b = np.asarray(b, dtype=float)
            norm = np.linalg.norm(b)
            if norm < 1e-12:
                raise ValueError("zero Bloch vector cannot be normalized")
            rows.append(bloch_to_state(b / norm))
        V = np.array(rows)
    elif "vectors" in doc:
        rows = []
        for entry in doc["vectors"]:
            amps = np.array([complex(re, im) for re, im in entry])
            if amps.shape != (dimension,):
                raise ValueError("vector length inconsistent with dimension")
            norm = np.linalg.norm(amps)
            if norm < 1e-12:
                raise ValueError("zero vector cannot be normalized")
            rows.append(amps / norm)
        V = np.array(rows)
    else:
        raise ValueError("design document needs `vectors` or `bloch`")
    return QuantumDesign(dimension=dimension, vectors=V, degree=degree, label=label)


def dump_design(design: QuantumDesign) -> dict:
    """Design as a plain mapping using the complex-pair schema of load_design."""
    vectors = [[[float(a.real), float(a.imag)] for a in row] for row in design.vectors]
    return {
        "label": design.label,
        "dimension": design.dimension,
        "degree": design.degree,
        "vectors": vectors,
    }


def _catalog_dir() -> Path:
    override = os.environ.get(CATALOG_ENV)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def builtin_design(name: str) -> QuantumDesign:
    """One of the bundled qubit designs: octahedron (K=6, t=3), icosahedron
    (K=12, t=5), or snub_cube_deformed (K=24, t=7)."""
    if name not in CATALOG_NAMES:
        raise ValueError(f"unknown design name {name!r}; choose from {CATALOG_NAMES}")
    directory = _catalog_dir()
    key = (name, str(directory))
    if key not in _BUILTIN_CACHE:
        design = load_design(directory / f"{name}.json")
        report = verify_design(design, design.degree, VERIFY_TOL)
        if not report.passed:
            raise ValueError(f"catalog file for {name!r} fails design verification")
        _BUILTIN_CACHE[key] = design
    return _BUILTIN_CACHE[key]


@dataclass(frozen=True)
class SearchOptions:
    """Settings for the frame-potential descent."""

    iterations: int = 6000
    restarts: int = 6
    tol: float = 1e-10
    initial_step: float = 0.1


@dataclass(frozen=True)
class SearchResult:
    """Best candidate found, its residual above the Welch bound, and whether
    the tolerance was met."""

    design: QuantumDesign
    residual: float
    converged: bool
    iterations: int
    restart: int


def _descend(V: np.ndarray, t: int, opts: SearchOptions):
    K = V.shape[0]
    target = welch_bound(V.shape[1], t)

    def potential(W):
        A = np.abs(W @ W.conj().T) ** 2
        return float(np.sum(A**t) / K**2)

    step = opts.initial_step
    pot = potential(V)
    iters = 0
    for iters in range(1, opts.iterations + 1):
        G = V @ V.conj().T
        A = np.abs(G) ** 2
        # Wirtinger gradient of the potential, projected to the sphere tangent
        grad = (2 * t / K**2) * ((A ** (t - 1) * G) @ V)
        grad -= np.sum(V.conj() * grad, axis=1).real[:, None] * V
        if np.linalg.norm(grad) < 1e-18:
            break
        for _ in range(40):
            cand = V - step * grad
            cand /= np.linalg.norm(cand, axis=1)[:, None]
            cand_pot = potential(cand)
            if cand_pot < pot:
                break
            step *= 0.5
        else:
            break
        V, pot = cand, cand_pot
        step *= 1.3
        if pot - target <= opts.tol:
            break
    return V, pot - target, iters


def search_design(d: int, K: int, t: int, seed: int = 0, opts: SearchOptions | None = None) -> SearchResult:
    """Minimize the t-th frame potential over K unit vectors in C^d.

    Projected gradient descent with backtracking line search and seeded
    random restarts.  Success means the residual above the Welch bound is at
    most opts.tol; otherwise the best candidate is returned with the
    converged flag cleared.  Ties between restarts go to the earliest one.
    """
    if opts is None:
        opts = SearchOptions()
    rng = np.random.default_rng(seed)
    best = None
    for restart in range(opts.restarts):
        V = rng.normal(size=(K, d)) + 1j * rng.normal(size=(K, d))
        V /= np.linalg.norm(V, axis=1)[:, None]
        V, residual, iters = _descend(V, int(t), opts)
        if best is None or residual < best[0]:
            best = (residual, restart, iters, V)
        if best[0] <= opts.tol:
            break
    residual, restart, iters, V = best
    design = QuantumDesign(
        dimension=d,
        vectors=_fix_phases(V),
        degree=int(t),
        label=f"search-d{d}-K{K}-t{t}",
    )
    return SearchResult(
        design=design,
        residual=residual,
        converged=residual <= opts.tol,
        iterations=iters,
        restart=restart,
    )
