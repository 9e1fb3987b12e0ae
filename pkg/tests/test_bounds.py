"""Two-sided entropy estimates: assembly, transforms, and certification ops."""

import numpy as np
import pytest

from designent import bounds as bnd
from designent import designs as dsg
from designent import entropy as ent
from designent import measurements as msr
from designent import upsilon as ups


def haar_pure_states(d, count, seed):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=(count, d)) + 1j * rng.normal(size=(count, d))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return np.einsum("ki,kj->kij", v, v.conj())


def test_uniform_indices_collapse_to_max_entropy():
    for L in (2, 6, 24):
        for alpha in (0.3, 1.0, 1.7):
            for scheme in ("taylor", "chebyshev"):
                indices = [float(L) ** (1 - s) for s in range(2, 5)]
                pair = bnd.distribution_bounds(indices, L, alpha, scheme)
                target = ent.ln_alpha(L, alpha)
                assert pair.lower == pytest.approx(target, abs=1e-10)
                assert pair.upper == pytest.approx(target, abs=1e-10)


def test_octahedron_distribution_example():
    p = np.array([1 / 3, 0, 1 / 6, 1 / 6, 1 / 6, 1 / 6])
    indices = [msr.coincidence_index(p, s) for s in (2, 3)]
    np.testing.assert_allclose(indices, [2 / 9, 1 / 18], atol=1e-15)
    for scheme in ("taylor", "chebyshev"):
        for alpha in (0.3, 0.7, 1.0, 1.3, 1.7, 2.0):
            pair = bnd.distribution_bounds(indices, 6, alpha, scheme)
            truth = ent.tsallis(p, alpha)
            assert pair.lower <= truth + 1e-9
            assert truth <= pair.upper + 1e-9
    frozen = bnd.distribution_bounds(indices, 6, 0.7, "chebyshev")
    assert frozen.lower == pytest.approx(1.955797827002506, abs=1e-12)
    assert frozen.upper == pytest.approx(2.2341418763238523, abs=1e-12)
    assert frozen.upsilon_used == pytest.approx(0.35525342575919017, abs=1e-12)


def test_alpha_two_is_exact():
    rng = np.random.default_rng(19)
    for _ in range(20):
        p = rng.dirichlet(np.ones(6))
        index = float(np.sum(p * p))
        for scheme in ("taylor", "chebyshev"):
            pair = bnd.distribution_bounds([index], 6, 2.0, scheme)
            assert pair.lower == pytest.approx(1.0 - index, abs=1e-12)
            assert pair.upper == pytest.approx(1.0 - index, abs=1e-12)


def test_support_shrinks_the_constant_term():
    # octahedron pure-state distribution: five of six outcomes fire
    p = np.array([1 / 3, 0, 1 / 6, 1 / 6, 1 / 6, 1 / 6])
    indices = [msr.coincidence_index(p, s) for s in (2, 3)]
    truth = ent.tsallis(p, 0.7)
    wide = bnd.distribution_bounds(indices, 6, 0.7, "chebyshev")
    tight = bnd.distribution_bounds(indices, 6, 0.7, "chebyshev", support=5)
    assert tight.upper < wide.upper
    assert tight.lower <= truth + 1e-12 and truth <= tight.upper + 1e-12
    # claiming a point support for a spread distribution breaks the bracket
    with pytest.raises(ValueError):
        bnd.distribution_bounds(indices, 6, 0.7, "chebyshev", support=1)
    with pytest.raises(ValueError):
        bnd.distribution_bounds(indices, 6, 0.7, "chebyshev", support=7)
    with pytest.raises(ValueError):
        bnd.distribution_bounds(indices, 6, 0.7, "chebyshev", support=0)


def test_infeasible_indices_error():
    with pytest.raises(ValueError):
        bnd.distribution_bounds([0.1, 0.2], 6, 0.7)
    with pytest.raises(ValueError):
        bnd.distribution_bounds([1.0 / 7.0], 6, 0.7)
    with pytest.raises(ValueError):
        bnd.distribution_bounds([1.2], 6, 0.7)
    with pytest.raises(ValueError):
        bnd.distribution_bounds([0.5], 1, 0.7)


def test_renyi_transform():
    indices = [2 / 9, 1 / 18]
    for alpha in (0.3, 0.7, 1.3, 1.7):
        pair = bnd.distribution_bounds(indices, 6, alpha)
        renyi = bnd.renyi_bounds(pair, alpha)
        assert renyi.entropy_kind == "renyi"
        for ts, ry in ((pair.lower, renyi.lower), (pair.upper, renyi.upper)):
            assert ry == pytest.approx(
                np.log1p((1.0 - alpha) * ts) / (1.0 - alpha), abs=1e-12
            )
    # identity at alpha = 1, exact --ln I at alpha = 2
    one = bnd.distribution_bounds(indices, 6, 1.0)
    mapped = bnd.renyi_bounds(one, 1.0)
    assert (mapped.lower, mapped.upper) == (one.lower, one.upper)
    two = bnd.distribution_bounds([0.25], 6, 2.0)
    collision = bnd.renyi_bounds(two, 2.0)
    assert collision.lower == pytest.approx(np.log(4.0), abs=1e-12)
    assert collision.upper == pytest.approx(np.log(4.0), abs=1e-12)


def test_renyi_transform_validation():
    pair = bnd.distribution_bounds([2 / 9, 1 / 18], 6, 0.7)
    with pytest.raises(ValueError):
        bnd.renyi_bounds(pair, 0.8)
    renyi = bnd.renyi_bounds(pair, 0.7)
    with pytest.raises(ValueError):
        bnd.renyi_bounds(renyi, 0.7)
    # upper bound at least 1/(alpha - 1) empties the log domain
    bad = bnd.BoundPair(
        lower=0.0, upper=1.2, scheme="taylor", entropy_kind="tsallis",
        alpha=2.0, upsilon_used=0.5, n_used=2,
    )
    with pytest.raises(ValueError, match="log argument"):
        bnd.renyi_bounds(bad, 2.0)


def test_bound_pair_order_validation():
    with pytest.raises(ValueError):
        bnd.BoundPair(
            lower=1.0, upper=0.5, scheme="taylor", entropy_kind="tsallis",
            alpha=0.7, upsilon_used=0.5, n_used=2,
        )


def test_design_bounds_bracket_true_entropy():
    for name in dsg.CATALOG_NAMES:
        design = dsg.builtin_design(name)
        povm = msr.single_povm(design)
        for rho in msr.random_states(2, 15, seed=53):
            p = msr.probabilities(povm, rho)
            for alpha in (0.5, 1.0, 1.5):
                truth_ts = ent.tsallis(p, alpha)
                truth_ry = ent.renyi(p, alpha)
                for scheme in ("taylor", "chebyshev"):
                    pair = bnd.design_povm_bounds(design, rho, alpha, scheme)
                    assert pair.lower <= truth_ts + 1e-9, (name, alpha, scheme)
                    assert truth_ts <= pair.upper + 1e-9, (name, alpha, scheme)
                    renyi = bnd.renyi_bounds(pair, alpha)
                    assert renyi.lower <= truth_ry + 1e-9
                    assert truth_ry <= renyi.upper + 1e-9


def test_design_bounds_collapse_when_maximally_mixed():
    # the floor index identifies the maximally mixed state, where the pair
    # degenerates to the exact uniform entropy instead of a double-root solve
    mixed = np.eye(2, dtype=complex) / 2.0
    for name in dsg.CATALOG_NAMES:
        design = dsg.builtin_design(name)
        for alpha in (0.3, 1.0, 1.7):
            target = ent.ln_alpha(design.size, alpha)
            for scheme in ("taylor", "chebyshev"):
                pair = bnd.design_povm_bounds(design, mixed, alpha, scheme)
                assert pair.lower == target
                assert pair.upper == target
                assert pair.upsilon_used == 1.0 / design.size
            lowers, uppers = bnd.batch_design_bounds(
                design, mixed[None, :, :], alpha, "chebyshev"
            )
            assert lowers[0] == target
            assert uppers[0] == target


def test_split_bounds_bracket_average_entropy():
    design = dsg.builtin_design("octahedron")
    partition = [[0, 1], [2, 3], [4, 5]]
    parts = msr.split_povms(design, 3, partition)
    for rho in msr.random_states(2, 15, seed=59):
        dists = [msr.probabilities(part, rho) for part in parts]
        for alpha in (0.5, 1.0, 1.5):
            mean_entropy = np.mean([ent.tsallis(p, alpha) for p in dists])
            for scheme in ("taylor", "chebyshev"):
                pair = bnd.design_povm_bounds(
                    design, rho, alpha, scheme, M=3, partition=partition
                )
                assert pair.lower <= mean_entropy + 1e-9
                assert mean_entropy <= pair.upper + 1e-9


def test_split_bounds_validation():
    design = dsg.builtin_design("octahedron")
    rho = np.eye(2, dtype=complex) / 2.0
    with pytest.raises(ValueError):
        bnd.design_povm_bounds(design, rho, 0.7, M=3)
    with pytest.raises(ValueError):
        bnd.design_povm_bounds(design, rho, 0.7, M=3, partition=[[0, 2], [1, 3], [4, 5]])


def test_batch_matches_scalar_bounds():
    design = dsg.builtin_design("icosahedron")
    states = msr.random_states(2, 40, seed=61)
    for alpha in (0.4, 1.0, 1.6):
        for scheme in ("taylor", "chebyshev"):
            lows, ups_ = bnd.batch_design_bounds(design, states, alpha, scheme)
            for i in (0, 7, 23, 39):
                pair = bnd.design_povm_bounds(design, states[i], alpha, scheme)
                assert lows[i] == pytest.approx(pair.lower, abs=1e-12)
                assert ups_[i] == pytest.approx(pair.upper, abs=1e-12)


def test_pure_state_lower_bound_values():
    assert bnd.pure_state_lower_bound(6, 2, 3, 2.0) == pytest.approx(
        7.0 / 9.0, abs=1e-12
    )
    assert bnd.pure_state_lower_bound(6, 2, 3, 0.7) == pytest.approx(
        1.955797827002506, abs=1e-12
    )
    # flexible coefficients beat the fixed expansion at pure states for the
    # two smaller designs at every order and for all three at alpha >= 0.7
    for K, d, t in ((6, 2, 3), (12, 2, 5), (24, 2, 7)):
        for alpha in (0.3, 0.7, 1.0, 1.3, 1.7):
            if (K, alpha) == (24, 0.3):
                continue
            cheb = bnd.pure_state_lower_bound(K, d, t, alpha, "chebyshev")
            tay = bnd.pure_state_lower_bound(K, d, t, alpha, "taylor")
            assert cheb >= tay - 1e-12, (K, alpha)


def test_pure_state_bound_floors_sampled_pure_states():
    design = dsg.builtin_design("octahedron")
    povm = msr.single_povm(design)
    bound = bnd.pure_state_lower_bound(6, 2, 3, 1.0, "chebyshev")
    for rho in haar_pure_states(2, 300, seed=67):
        p = msr.probabilities(povm, rho)
        assert ent.shannon(p) >= bound - 1e-9


def test_state_independent_check_report():
    design = dsg.builtin_design("octahedron")
    report = bnd.state_independent_check(design, 0.7, "chebyshev", samples=500, seed=1)
    assert report.passed
    assert report.min_margin >= -1e-9
    assert report.samples == 500 and report.seed == 1
    assert report.label == design.label and report.scheme == "chebyshev"
    msr.check_state(report.worst_state)
    again = bnd.state_independent_check(design, 0.7, "chebyshev", samples=500, seed=1)
    assert again.min_margin == report.min_margin
    single = bnd.state_independent_check(design, 1.3, "taylor", samples=1, seed=4)
    assert single.min_margin >= -1e-10
    with pytest.raises(ValueError):
        bnd.state_independent_check(design, 0.7, "chebyshev", samples=0)


def test_quantum_bounds_examples():
    for alpha in (0.4, 1.0, 1.8):
        for scheme in ("taylor", "chebyshev"):
            mixed = bnd.quantum_entropy_bounds(
                [0.5, 0.25], 2, 3, alpha, scheme
            )
            target = ent.ln_alpha(2, alpha)
            assert mixed.lower == pytest.approx(target, abs=1e-10)
            assert mixed.upper == pytest.approx(target, abs=1e-10)
            pure = bnd.quantum_entropy_bounds(
                [1.0, 1.0], 2, 3, alpha, scheme, support=1
            )
            assert abs(pure.lower) < 1e-10 and abs(pure.upper) < 1e-10


def test_quantum_bounds_bracket_spectrum_entropy():
    for d in (2, 3, 4):
        for rho in msr.random_states(d, 20, seed=71 + d):
            moments = msr.state_moments(rho, 3)[1:]
            for alpha in (0.5, 1.0, 1.5):
                truth = ent.quantum_tsallis(rho, alpha)
                for scheme in ("taylor", "chebyshev"):
                    pair = bnd.quantum_entropy_bounds(moments, d, 3, alpha, scheme)
                    assert pair.lower <= truth + 1e-9
                    assert truth <= pair.upper + 1e-9


def test_quantum_bounds_validation():
    with pytest.raises(ValueError):
        bnd.quantum_entropy_bounds([0.5], 2, 3, 0.7)
    with pytest.raises(ValueError):
        bnd.quantum_entropy_bounds([0.3, 0.5], 2, 3, 0.7)
    with pytest.raises(ValueError):
        bnd.quantum_entropy_bounds([0.4, 0.35], 2, 3, 0.7)


def test_separability_threshold():
    assert bnd.separability_threshold(6, 2, 3) == pytest.approx(
        0.35525342575919017, abs=1e-12
    )
    pure_index = 12.0 ** (-4) * 2.0**5 * dsg.welch_bound(2, 5)
    assert pure_index == pytest.approx(1.0 / 3888.0, abs=1e-18)
    expected = ups.max_root(ups.UpsilonQuery(12, 5, pure_index))
    assert bnd.separability_threshold(12, 2, 5) == pytest.approx(expected, abs=1e-14)
    assert bnd.separability_threshold(2, 2, 1) == 1.0


def test_entanglement_entropy_threshold_requires_matching_pass():
    design = dsg.builtin_design("octahedron")
    report = bnd.state_independent_check(design, 0.7, "chebyshev", samples=300, seed=2)
    value = bnd.entanglement_entropy_threshold(design, 0.7, "chebyshev", report)
    assert value == pytest.approx(
        bnd.pure_state_lower_bound(6, 2, 3, 0.7, "chebyshev"), abs=1e-15
    )
    with pytest.raises(ValueError):
        bnd.entanglement_entropy_threshold(design, 0.8, "chebyshev", report)
    with pytest.raises(ValueError):
        bnd.entanglement_entropy_threshold(design, 0.7, "taylor", report)
    failed = bnd.StateIndependenceReport(
        label=design.label, alpha=0.7, scheme="chebyshev", samples=10,
        seed=0, min_margin=-1.0, worst_state=np.eye(2) / 2.0,
    )
    with pytest.raises(ValueError, match="did not pass"):
        bnd.entanglement_entropy_threshold(design, 0.7, "chebyshev", failed)
    with pytest.raises(ValueError):
        bnd.entanglement_entropy_threshold(design, 0.7, "chebyshev", None)


def test_inefficiency_transform_values():
    p = np.array([0.5, 0.5])
    np.testing.assert_allclose(
        bnd.inefficiency_transform(p, 0.9), [0.45, 0.45, 0.1], atol=1e-15
    )
    same = bnd.inefficiency_transform(p, 1.0)
    np.testing.assert_array_equal(same, p)
    np.testing.assert_allclose(
        bnd.inefficiency_transform([1.0], 0.5), [0.5, 0.5], atol=1e-15
    )
    with pytest.raises(ValueError):
        bnd.inefficiency_transform(p, 0.4)
    with pytest.raises(ValueError):
        bnd.inefficiency_transform(p, 1.1)


def test_inefficiency_round_trip():
    rng = np.random.default_rng(73)
    for L in (2, 6, 24):
        for kappa in (0.5, 0.75, 0.9, 1.0):
            for _ in range(5):
                p = rng.dirichlet(np.ones(L))
                q = bnd.inefficiency_transform(p, kappa)
                for s in range(1, 8):
                    ideal = msr.coincidence_index(p, s)
                    seen = msr.coincidence_index(q, s)
                    back = bnd.inefficiency_index_invert(seen, kappa, s, outcomes=L)
                    assert back == pytest.approx(ideal, abs=1e-12), (L, kappa, s)


def test_inefficiency_inversion_range_check():
    # inverting ideal data with a kappa that never produced it leaves the window
    ideal = msr.coincidence_index(np.full(6, 1 / 6), 3)
    with pytest.raises(ValueError, match="wrong kappa"):
        bnd.inefficiency_index_invert(ideal, 0.5, 3, outcomes=6)
    with pytest.raises(ValueError):
        bnd.inefficiency_index_invert(0.5, 0.9, 0)
    # without the outcome count only the [0, 1] window applies
    assert bnd.inefficiency_index_invert(0.9, 1.0, 2) == pytest.approx(0.9)


def test_max_relative_gap():
    lt = [0.0, 1.0]
    ut = [4.0, 2.0]
    lch = [1.0, 0.5]
    uch = [2.0, 4.0]
    # row envelopes: [1, 2] and [1, 2] -> relative gaps 1/2 both rows
    assert bnd.max_relative_gap(lt, ut, lch, uch) == pytest.approx(0.5, abs=1e-15)
