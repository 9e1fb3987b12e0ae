"""Two-sided Tsallis and Renyi entropy bounds for design-structured POVMs.

The library builds POVMs from quantum t-designs, turns measured coincidence
indices or state moments into certified entropy brackets via two polynomial
estimation schemes, and exposes the derived caps and thresholds (maximal
probability, separability, entanglement witnessing, detector inefficiency).
"""

from .bounds import (
    BoundPair,
    StateIndependenceReport,
    batch_design_bounds,
    design_povm_bounds,
    distribution_bounds,
    entanglement_entropy_threshold,
    inefficiency_index_invert,
    inefficiency_transform,
    max_relative_gap,
    pure_state_lower_bound,
    quantum_entropy_bounds,
    renyi_bounds,
    separability_threshold,
    state_independent_check,
)
from .designs import (
    CATALOG_NAMES,
    DesignVerificationReport,
    QuantumDesign,
    SearchOptions,
    SearchResult,
    bloch_to_state,
    builtin_design,
    dump_design,
    frame_potential,
    load_design,
    search_design,
    state_to_bloch,
    verify_design,
    welch_bound,
)
from .entropy import (
    EntropyOrder,
    eta_alpha,
    ln_alpha,
    quantum_renyi,
    quantum_tsallis,
    renyi,
    shannon,
    tsallis,
)
from .measurements import (
    Povm,
    beta_bar,
    check_distribution,
    check_state,
    coincidence_index,
    probabilities,
    random_states,
    single_povm,
    split_povms,
    state_moments,
    sym_overlap,
)
from .polyest import (
    CoefficientSet,
    ShiftedChebyshev,
    alpha_zero_lower_coeffs,
    chebyshev_coeffs,
    chebyshev_star_coeffs,
    eval_lower,
    eval_upper,
    rising_factorial,
    tau,
    taylor_coeffs,
)
from .upsilon import UpsilonQuery, max_root, max_root_values, upsilon_for_design

__version__ = "0.1.0"

__all__ = [
    "BoundPair",
    "CATALOG_NAMES",
    "CoefficientSet",
    "DesignVerificationReport",
    "EntropyOrder",
    "Povm",
    "QuantumDesign",
    "SearchOptions",
    "SearchResult",
    "ShiftedChebyshev",
    "StateIndependenceReport",
    "UpsilonQuery",
    "alpha_zero_lower_coeffs",
    "batch_design_bounds",
    "beta_bar",
    "bloch_to_state",
    "builtin_design",
    "chebyshev_coeffs",
    "chebyshev_star_coeffs",
    "check_distribution",
    "check_state",
    "coincidence_index",
    "design_povm_bounds",
    "distribution_bounds",
    "dump_design",
    "entanglement_entropy_threshold",
    "eta_alpha",
    "eval_lower",
    "eval_upper",
    "frame_potential",
    "inefficiency_index_invert",
    "inefficiency_transform",
    "ln_alpha",
    "load_design",
    "max_relative_gap",
    "max_root",
    "max_root_values",
    "probabilities",
    "pure_state_lower_bound",
    "quantum_entropy_bounds",
    "quantum_renyi",
    "quantum_tsallis",
    "random_states",
    "renyi",
    "renyi_bounds",
    "rising_factorial",
    "search_design",
    "separability_threshold",
    "shannon",
    "single_povm",
    "split_povms",
    "state_independent_check",
    "state_moments",
    "state_to_bloch",
    "sym_overlap",
    "tau",
    "taylor_coeffs",
    "tsallis",
    "upsilon_for_design",
    "verify_design",
    "welch_bound",
]
