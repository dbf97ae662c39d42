import numpy as np
import pytest

from quditgates import (
    SubspaceMap,
    apply_gate,
    basis_state,
    dagger,
    gate_power,
    is_unitary,
    make_x,
    make_y,
    make_z,
    omega,
)

np_rng = np.random.default_rng(20240901)

DIMS = [2, 3, 4, 5, 8]


def shift_oracle(d, n):
    """Brute-force permutation: entry 1 at ((l+n) mod d, l)."""
    m = np.zeros((d, d), dtype=complex)
    for l in range(d):
        m[(l + n) % d, l] = 1.0
    return m


@pytest.mark.parametrize("d", DIMS)
def test_group_relations(d):
    x, z = make_x(d), make_z(d)
    assert np.linalg.norm(gate_power(x, d) - np.eye(d)) < 1e-12
    assert np.linalg.norm(gate_power(z, d) - np.eye(d)) < 1e-12
    # X.Z = omega^{-1} Z.X; at d=4 the factor is -i
    assert np.linalg.norm(x @ z - z @ x / omega(d)) < 1e-12


@pytest.mark.parametrize("d", DIMS)
def test_constructed_gates_are_unitary(d):
    for g in (make_x(d), make_z(d), make_y(d)):
        assert is_unitary(g)


def test_x_is_cyclic_permutation():
    x = make_x(4)
    assert np.array_equal(x, shift_oracle(4, 1))
    # wrap-around column: |3> -> |0>
    assert x[0, 3] == 1.0
    assert np.array_equal(apply_gate(x, basis_state(4, 2)), basis_state(4, 3))


def test_x_d2_is_sigma_x():
    assert np.array_equal(make_x(2), np.array([[0, 1], [1, 0]], dtype=complex))


def test_z_diagonal_d4():
    z = make_z(4)
    assert np.allclose(np.diag(z), [1, 1j, -1, -1j], atol=1e-12)
    assert np.allclose(apply_gate(z, basis_state(4, 2)), -basis_state(4, 2), atol=1e-12)


def test_z_d2_is_sigma_z():
    assert np.allclose(make_z(2), np.diag([1.0, -1.0]), atol=1e-12)


def test_y_is_x_times_z():
    for d in DIMS:
        y = make_y(d)
        assert np.allclose(y, make_x(d) @ make_z(d), atol=1e-12)
        # column l has its only nonzero entry omega^l at row (l+1) mod d
        for l in range(d):
            col = y[:, l]
            assert abs(col[(l + 1) % d] - omega(d) ** l) < 1e-12
            assert np.count_nonzero(np.abs(col) > 1e-12) == 1
        assert np.allclose(apply_gate(y, basis_state(d, 0)), basis_state(d, 1), atol=1e-12)


def test_y_d2_phase_convention():
    # X @ Z multiplies out to -i*sigma_y, i.e. sigma_y up to a global phase.
    sigma_y = np.array([[0, -1j], [1j, 0]])
    y = make_y(2)
    assert np.allclose(y, -1j * sigma_y, atol=1e-12)
    phase = y[1, 0] / sigma_y[1, 0]
    assert abs(abs(phase) - 1) < 1e-12
    assert np.allclose(y, phase * sigma_y, atol=1e-12)


@pytest.mark.parametrize("d", DIMS)
def test_gate_power_matches_shift_oracle(d):
    x = make_x(d)
    for n in range(-2 * d, 2 * d + 1):
        assert np.linalg.norm(gate_power(x, n) - shift_oracle(d, n)) < 1e-12


def test_gate_power_zero_is_identity():
    g = make_y(5)
    assert np.array_equal(gate_power(g, 0), np.eye(5, dtype=complex))


def test_x2_swaps_pairs_d4():
    x2 = gate_power(make_x(4), 2)
    for a, b in ((0, 2), (1, 3)):
        assert np.array_equal(apply_gate(x2, basis_state(4, a)), basis_state(4, b))
        assert np.array_equal(apply_gate(x2, basis_state(4, b)), basis_state(4, a))


def test_x_cubed_equals_dagger_d4():
    x = make_x(4)
    assert np.linalg.norm(gate_power(x, 3) - dagger(x)) < 1e-12


def test_dagger():
    x, z = make_x(4), make_z(4)
    assert np.array_equal(apply_gate(dagger(x), basis_state(4, 0)), basis_state(4, 3))
    assert np.allclose(np.diag(dagger(z)), omega(4) ** -np.arange(4), atol=1e-12)
    g = np.linalg.qr(np_rng.normal(size=(4, 4)) + 1j * np_rng.normal(size=(4, 4)))[0]
    assert np.array_equal(dagger(dagger(g)), g)


def test_apply_examples_d4():
    x, z = make_x(4), make_z(4)
    plus01 = (basis_state(4, 0) + basis_state(4, 1)) / np.sqrt(2)
    plus12 = (basis_state(4, 1) + basis_state(4, 2)) / np.sqrt(2)
    assert np.allclose(apply_gate(x, plus01), plus12, atol=1e-12)
    assert np.allclose(apply_gate(np.eye(4), plus01), plus01, atol=1e-12)
    plus02 = (basis_state(4, 0) + basis_state(4, 2)) / np.sqrt(2)
    minus02 = (basis_state(4, 0) - basis_state(4, 2)) / np.sqrt(2)
    assert np.allclose(apply_gate(z, plus02), minus02, atol=1e-12)


def test_apply_preserves_norm_random_pairs():
    for _ in range(1000):
        d = int(np_rng.integers(2, 9))
        gate = {0: make_x, 1: make_z, 2: make_y}[int(np_rng.integers(3))](d)
        gate = gate_power(gate, int(np_rng.integers(-d, d + 1)))
        state = np_rng.normal(size=d) + 1j * np_rng.normal(size=d)
        state /= np.linalg.norm(state)
        assert abs(np.linalg.norm(apply_gate(gate, state)) - 1.0) < 1e-12


def test_apply_dimension_mismatch():
    with pytest.raises(ValueError, match="incompatible"):
        apply_gate(make_x(4), basis_state(3, 0))


def test_subspace_map_experiment_window():
    m = SubspaceMap(4, -2)
    assert m.oam_labels == (-2, -1, 0, 1)
    assert m.to_oam(3) == 1
    assert m.to_logical(-2) == 0
    for j in range(4):
        assert m.to_logical(m.to_oam(j)) == j


def test_subspace_map_identity_offset():
    m = SubspaceMap(4, 0)
    assert all(m.to_oam(j) == j for j in range(4))


def test_subspace_map_range_errors():
    m = SubspaceMap(4, -2)
    with pytest.raises(ValueError):
        m.to_oam(4)
    with pytest.raises(ValueError):
        m.to_oam(-1)
    with pytest.raises(ValueError):
        m.to_logical(2)
