import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from promiscuity import gaussian
from promiscuity.gaussian import (
    CovarianceMatrix,
    InconclusiveSeparabilityError,
    ModePartition,
    SymplecticTransform,
    apply,
    compose,
    is_ppt_separable,
    log_negativity,
    partial_transpose,
    permute_modes,
    reduce,
    symplectic_eigenvalues,
    symplectic_form,
    two_mode_squeezer,
    vacuum_cm,
    von_neumann_entropy,
)

squeezings = st.floats(min_value=0.0, max_value=2.5, allow_nan=False)


def tmsv(r: float) -> CovarianceMatrix:
    return apply(two_mode_squeezer(0, 1, r, 2), vacuum_cm(2))


def test_symplectic_form_blocks():
    omega = symplectic_form(2)
    expected = np.block(
        [[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]]
    )
    assert np.array_equal(omega, expected)


def test_vacuum_is_identity():
    vac = vacuum_cm(4)
    assert vac.n_modes == 4
    assert vac.dim == 8
    assert np.array_equal(vac.data, np.eye(8))
    assert vac.is_physical() and vac.is_pure()


def test_vacuum_rejects_zero_modes():
    with pytest.raises(ValueError):
        vacuum_cm(0)


def test_covariance_matrix_rejects_asymmetry():
    data = np.eye(2)
    data[0, 1] = 1e-6
    with pytest.raises(ValueError, match="asymmetric"):
        CovarianceMatrix(1, data)


def test_covariance_matrix_symmetrizes_within_tolerance():
    data = np.eye(2)
    data[0, 1] = 3e-11
    cm = CovarianceMatrix(1, data)
    assert cm.data[0, 1] == cm.data[1, 0]
    assert not cm.data.flags.writeable


def test_covariance_matrix_rejects_wrong_shape():
    with pytest.raises(ValueError):
        CovarianceMatrix(2, np.eye(3))


def test_two_mode_squeezer_entries():
    # q-block mixes with +sinh, p-block with -sinh
    r = 0.7
    s = two_mode_squeezer(0, 1, r, 2).data
    c, sh = math.cosh(r), math.sinh(r)
    assert s[0, 0] == pytest.approx(c, abs=0)
    assert s[0, 1] == pytest.approx(sh, abs=0)
    assert s[2, 3] == pytest.approx(-sh, abs=0)
    assert s[3, 3] == pytest.approx(c, abs=0)
    assert s[0, 2] == 0.0 and s[1, 3] == 0.0


def test_two_mode_squeezer_rejects_bad_modes():
    with pytest.raises(ValueError):
        two_mode_squeezer(1, 1, 0.5, 3)
    with pytest.raises(ValueError):
        two_mode_squeezer(0, 3, 0.5, 3)


def test_symplectic_transform_validates():
    with pytest.raises(ValueError, match="not symplectic"):
        SymplecticTransform(1, np.diag([2.0, 3.0]))


def test_compose_applies_rightmost_first():
    a = two_mode_squeezer(0, 1, 0.4, 3)
    b = two_mode_squeezer(1, 2, 0.9, 3)
    combined = apply(compose(a, b), vacuum_cm(3))
    step_by_step = apply(a, apply(b, vacuum_cm(3)))
    assert np.allclose(combined.data, step_by_step.data, atol=1e-12)
    swapped = apply(compose(b, a), vacuum_cm(3))
    assert not np.allclose(combined.data, swapped.data, atol=1e-6)


def test_apply_dimension_mismatch():
    with pytest.raises(ValueError):
        apply(two_mode_squeezer(0, 1, 0.2, 2), vacuum_cm(3))


def test_reduce_single_mode_of_tmsv():
    # tracing one arm of a two-mode squeezed state leaves a thermal mode
    r = 0.8
    red = reduce(tmsv(r), {0})
    assert np.allclose(red.data, math.cosh(2 * r) * np.eye(2), atol=1e-12)


def test_reduce_identity_and_errors():
    state = tmsv(0.5)
    assert np.array_equal(reduce(state, {0, 1}).data, state.data)
    with pytest.raises(ValueError):
        reduce(state, set())
    with pytest.raises(ValueError):
        reduce(state, {0, 2})


def test_partial_transpose_is_momentum_flip():
    state = tmsv(0.6)
    flipped = partial_transpose(state, ModePartition(frozenset({0}), frozenset({1})))
    signs = np.array([1.0, 1.0, 1.0, -1.0])
    assert np.allclose(flipped.data, state.data * np.outer(signs, signs), atol=0)


def test_partial_transpose_involution():
    state = tmsv(1.1)
    part = ModePartition(frozenset({0}), frozenset({1}))
    twice = partial_transpose(partial_transpose(state, part), part)
    assert np.allclose(twice.data, state.data, atol=0)


def test_mode_partition_validation():
    with pytest.raises(ValueError):
        ModePartition(frozenset(), frozenset({1}))
    with pytest.raises(ValueError):
        ModePartition(frozenset({0}), frozenset({0, 1}))
    with pytest.raises(ValueError):
        ModePartition(frozenset({-1}), frozenset({0}))
    part = ModePartition(frozenset({0}), frozenset({3}))
    with pytest.raises(ValueError):
        part.validate_for(vacuum_cm(2))


def test_symplectic_eigenvalues_known_values():
    assert np.allclose(symplectic_eigenvalues(vacuum_cm(2)), [1.0, 1.0], atol=1e-12)
    thermal = CovarianceMatrix(1, 2.0 * np.eye(2))
    assert np.allclose(symplectic_eigenvalues(thermal), [2.0], atol=1e-12)
    assert np.allclose(symplectic_eigenvalues(tmsv(1.3)), [1.0, 1.0], atol=1e-9)


def test_symplectic_eigenvalues_of_partial_transpose():
    r = 0.9
    nu = symplectic_eigenvalues(
        partial_transpose(tmsv(r), ModePartition(frozenset({0}), frozenset({1})))
    )
    assert nu[0] == pytest.approx(math.exp(-2 * r), abs=1e-12)
    assert nu[1] == pytest.approx(math.exp(2 * r), abs=1e-11)


def test_symplectic_eigenvalues_indefinite_fallback():
    # not a physical CM; the general route must still return the moduli
    bad = CovarianceMatrix(1, np.diag([1.0, -0.5]))
    assert np.allclose(symplectic_eigenvalues(bad), [math.sqrt(0.5)], atol=1e-12)


@pytest.mark.parametrize("r", [0.1, 0.5, 1.0, 1.5, 2.5])
def test_log_negativity_of_tmsv(r):
    part = ModePartition(frozenset({0}), frozenset({1}))
    assert log_negativity(tmsv(r), part) == pytest.approx(2 * r, abs=1e-10)


def test_log_negativity_vacuum_and_swap():
    part = ModePartition(frozenset({0}), frozenset({1}))
    assert log_negativity(vacuum_cm(2), part) == 0.0
    state = tmsv(0.8)
    assert log_negativity(state, part) == pytest.approx(
        log_negativity(state, part.swapped()), abs=1e-10
    )


def test_log_negativity_mixed_state_route():
    # a thermal two-mode product state is PPT: zero negativity
    thermal = CovarianceMatrix(2, 2.0 * np.eye(4))
    part = ModePartition(frozenset({0}), frozenset({1}))
    assert not thermal.is_pure()
    assert log_negativity(thermal, part) == 0.0


def test_ppt_separability_verdicts():
    part = ModePartition(frozenset({0}), frozenset({1}))
    assert is_ppt_separable(vacuum_cm(2), part)
    assert not is_ppt_separable(tmsv(0.3), part)


def test_ppt_inconclusive_for_two_vs_two():
    four = vacuum_cm(4)
    part = ModePartition(frozenset({0, 1}), frozenset({2, 3}))
    with pytest.raises(InconclusiveSeparabilityError):
        is_ppt_separable(four, part)


def test_ppt_conclusive_for_one_vs_three():
    four = vacuum_cm(4)
    part = ModePartition(frozenset({0}), frozenset({1, 2, 3}))
    assert is_ppt_separable(four, part)


def test_von_neumann_entropy_values():
    assert von_neumann_entropy(vacuum_cm(1)) == 0.0
    # nu = 3: ((3+1)/2)log2((3+1)/2) - ((3-1)/2)log2((3-1)/2) = 2 exactly
    thermal = CovarianceMatrix(1, 3.0 * np.eye(2))
    assert von_neumann_entropy(thermal) == pytest.approx(2.0, abs=1e-12)
    red = reduce(tmsv(0.8), {0})
    nu = math.cosh(1.6)
    up, down = (nu + 1) / 2, (nu - 1) / 2
    expected = up * math.log2(up) - down * math.log2(down)
    assert von_neumann_entropy(red) == pytest.approx(expected, abs=1e-11)


def test_von_neumann_entropy_rejects_unphysical():
    bad = CovarianceMatrix(1, 0.5 * np.eye(2))
    with pytest.raises(ValueError):
        von_neumann_entropy(bad)


def test_permute_modes_round_trip():
    state = apply(two_mode_squeezer(0, 1, 0.7, 3), vacuum_cm(3))
    cycled = permute_modes(state, [2, 0, 1])
    nu_before = symplectic_eigenvalues(state)
    nu_after = symplectic_eigenvalues(cycled)
    assert np.allclose(nu_before, nu_after, atol=1e-10)
    back = permute_modes(cycled, [1, 2, 0])
    assert np.allclose(back.data, state.data, atol=0)


def test_physicality_of_partial_transpose():
    flipped = partial_transpose(tmsv(0.5), ModePartition(frozenset({0}), frozenset({1})))
    assert flipped.physicality_defect() < 0
    assert not flipped.is_physical()


def test_spectral_noise_floor_scales():
    small = vacuum_cm(2).spectral_noise_floor()
    big = CovarianceMatrix(2, 1e4 * np.eye(4)).spectral_noise_floor()
    assert 0 < small < big


@given(r=st.floats(min_value=0.0, max_value=3.0, allow_nan=False))
@settings(max_examples=40, deadline=None)
def test_tmsv_negativity_matches_closed_form(r):
    part = ModePartition(frozenset({0}), frozenset({1}))
    value = log_negativity(tmsv(r), part)
    # near r = 0 the signal nu - 1 = 2r^2 sinks below the spectral noise
    # floor, so only resolution-limited accuracy ~sqrt(floor) is promised
    assert value == pytest.approx(2 * r, abs=2e-6)
    if r >= 0.05:
        assert value == pytest.approx(2 * r, abs=1e-9)


@given(a=squeezings, s=squeezings)
@settings(max_examples=40, deadline=None)
def test_squeezer_chain_outputs_pure_physical_states(a, s):
    chain = compose(
        two_mode_squeezer(1, 2, s, 4),
        two_mode_squeezer(0, 1, a, 4),
        two_mode_squeezer(2, 3, a, 4),
    )
    state = apply(chain, vacuum_cm(4))
    assert state.is_physical()
    assert state.is_pure()


@given(r=st.floats(min_value=0.01, max_value=2.0, allow_nan=False), seed=st.integers(0, 2**31))
@settings(max_examples=30, deadline=None)
def test_partial_transpose_involution_random_partitions(r, seed):
    rng = np.random.default_rng(seed)
    state = apply(two_mode_squeezer(0, 1, r, 3), vacuum_cm(3))
    modes = [0, 1, 2]
    rng.shuffle(modes)
    part = ModePartition(frozenset(modes[:1]), frozenset(modes[1:]))
    twice = partial_transpose(partial_transpose(state, part), part)
    assert np.array_equal(twice.data, state.data)
