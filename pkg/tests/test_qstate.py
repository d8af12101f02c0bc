import math

import numpy as np
import pytest

from unruh_eur.errors import DomainError, InvalidStateError
from unruh_eur.qstate import (
    IDENTITY_2,
    PAULI_EXCHANGE_SUM,
    SWAP,
    BlochProjector,
    bell_singlet,
    binary_entropy,
    dephase,
    ket,
    measure_subsystem,
    named_state,
    normalize_angles,
    partial_trace,
    pure_density,
    random_density,
    state_fidelity,
    validate_state,
    von_neumann_entropy,
)


class TestBinaryEntropy:
    def test_degenerate_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_uniform_bit(self):
        assert binary_entropy(0.5) == 1.0

    def test_quarter(self):
        # -0.25 log2 0.25 - 0.75 log2 0.75 = 2 - 0.75 log2 3
        assert binary_entropy(0.25) == pytest.approx(0.811278124459133, abs=1e-14)

    def test_symmetry(self):
        for p in (0.1, 0.3, 0.42):
            assert binary_entropy(p) == pytest.approx(binary_entropy(1 - p), abs=1e-15)

    def test_clamps_tiny_excursions(self):
        assert binary_entropy(-1e-13) == 0.0
        assert binary_entropy(1 + 1e-13) == 0.0

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            binary_entropy(-1e-3)
        with pytest.raises(DomainError):
            binary_entropy(1.001)


class TestVonNeumannEntropy:
    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(IDENTITY_2 / 2) == pytest.approx(1.0, abs=1e-14)

    def test_pure_projector(self):
        assert von_neumann_entropy(pure_density(ket("0"))) == pytest.approx(0.0, abs=1e-14)

    def test_diagonal_four_level(self):
        rho = np.diag([0.5, 0.25, 0.125, 0.125]).astype(complex)
        assert von_neumann_entropy(rho) == pytest.approx(1.75, abs=1e-14)

    def test_rejects_non_hermitian(self):
        bad = np.array([[0.5, 0.1], [0.3, 0.5]], dtype=complex)
        with pytest.raises(InvalidStateError):
            von_neumann_entropy(bad)

    def test_rejects_wrong_trace(self):
        with pytest.raises(InvalidStateError):
            von_neumann_entropy(np.eye(2, dtype=complex))

    def test_range_on_random_states(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            s = von_neumann_entropy(random_density(rng, 4))
            assert -1e-12 <= s <= 2.0 + 1e-12


class TestPartialTrace:
    def test_singlet_marginals_are_maximally_mixed(self):
        for side in ("A", "B"):
            np.testing.assert_allclose(partial_trace(bell_singlet(), side),
                                       IDENTITY_2 / 2, atol=1e-14)

    def test_product_state_factors(self):
        rng = np.random.default_rng(1)
        rho_a = random_density(rng, 2)
        rho_b = random_density(rng, 2)
        product = np.kron(rho_a, rho_b)
        np.testing.assert_allclose(partial_trace(product, "A"), rho_a, atol=1e-14)
        np.testing.assert_allclose(partial_trace(product, "B"), rho_b, atol=1e-14)

    def test_x_state_marginal_is_diagonal(self):
        x, y, z, d = 0.1, 0.2, 0.5, 0.15
        rho = np.diag([x, y, y, z]).astype(complex)
        rho[1, 2] = rho[2, 1] = d
        np.testing.assert_allclose(partial_trace(rho, "B"),
                                   np.diag([x + y, y + z]), atol=1e-14)

    def test_trace_preserved(self):
        rng = np.random.default_rng(2)
        rho = random_density(rng, 4)
        assert np.trace(partial_trace(rho, "A")).real == pytest.approx(1.0, abs=1e-14)


class TestBlochProjector:
    @pytest.mark.parametrize("theta,phi", [(0.0, 0.0), (math.pi / 2, 0.0),
                                           (1.234, 5.0), (math.pi, 1.0)])
    def test_projector_pair_properties(self, theta, phi):
        p0, p1 = BlochProjector(theta, phi).projectors()
        np.testing.assert_allclose(p0 @ p1, np.zeros((2, 2)), atol=1e-12)
        np.testing.assert_allclose(p0 + p1, np.eye(2), atol=1e-12)
        np.testing.assert_allclose(p0 @ p0, p0, atol=1e-12)
        assert np.linalg.matrix_rank(p0) == 1

    def test_range_validation(self):
        with pytest.raises(DomainError):
            BlochProjector(-0.5, 0.0)
        with pytest.raises(DomainError):
            BlochProjector(0.5, 7.0)

    def test_normalize_angles_covers_sphere(self):
        theta, phi = normalize_angles(-0.3, 1.0)
        assert 0.0 <= theta <= math.pi
        assert 0.0 <= phi < 2 * math.pi
        direction = BlochProjector(theta, phi).direction()
        raw = np.array([math.sin(-0.3) * math.cos(1.0),
                        math.sin(-0.3) * math.sin(1.0),
                        math.cos(-0.3)])
        np.testing.assert_allclose(direction, raw, atol=1e-12)


class TestMeasureSubsystem:
    def test_singlet_z_is_perfectly_anticorrelated(self):
        outcomes = measure_subsystem(bell_singlet(), "A", "z")
        assert [p for p, _ in outcomes] == pytest.approx([0.5, 0.5], abs=1e-12)
        np.testing.assert_allclose(outcomes[0][1], pure_density(ket("1")), atol=1e-12)
        np.testing.assert_allclose(outcomes[1][1], pure_density(ket("0")), atol=1e-12)

    def test_deterministic_outcome_flags_undefined_branch(self):
        outcomes = measure_subsystem(pure_density(ket("11")), "A", "z")
        assert outcomes[0][0] == 0.0
        assert outcomes[0][1] is None
        assert outcomes[1][0] == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(outcomes[1][1], pure_density(ket("1")), atol=1e-12)

    def test_x_measurement_on_x_state(self):
        x, y, z, d = 0.1, 0.2, 0.5, 0.15
        rho = np.diag([x, y, y, z]).astype(complex)
        rho[1, 2] = rho[2, 1] = d
        outcomes = measure_subsystem(rho, "A", "x")
        for sign, (p, conditional) in zip((1, -1), outcomes):
            assert p == pytest.approx(0.5, abs=1e-12)
            np.testing.assert_allclose(conditional,
                                       np.array([[x + y, sign * d], [sign * d, y + z]]),
                                       atol=1e-12)

    def test_probabilities_sum_to_one_and_reassemble(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            rho = random_density(rng, 4)
            for which in ("A", "B"):
                for basis in ("x", "z", BlochProjector(0.7, 4.1)):
                    outcomes = measure_subsystem(rho, which, basis)
                    assert sum(p for p, _ in outcomes) == pytest.approx(1.0, abs=1e-12)
                    mixture = -sum(p * math.log2(p) for p, _ in outcomes if p > 1e-14)
                    mixture += sum(p * von_neumann_entropy(c)
                                   for p, c in outcomes if c is not None)
                    assert von_neumann_entropy(dephase(rho, which, basis)) == \
                        pytest.approx(mixture, abs=1e-10)

    def test_outcomes_rebuild_dephased_matrix(self):
        rng = np.random.default_rng(4)
        rho = random_density(rng, 4)
        basis = BlochProjector(1.9, 0.6)
        outcomes = measure_subsystem(rho, "A", basis)
        rebuilt = np.zeros((4, 4), dtype=complex)
        for vec, (p, conditional) in zip(basis.vectors(), outcomes):
            if conditional is not None:
                rebuilt += p * np.kron(np.outer(vec, vec.conj()), conditional)
        np.testing.assert_allclose(rebuilt, dephase(rho, "A", basis), atol=1e-12)


class TestOperatorsAndStates:
    def test_exchange_sum_spectrum(self):
        ev = np.sort(np.linalg.eigvalsh(PAULI_EXCHANGE_SUM))
        np.testing.assert_allclose(ev, [-3.0, 1.0, 1.0, 1.0], atol=1e-14)

    def test_swap_identity(self):
        np.testing.assert_allclose(PAULI_EXCHANGE_SUM, 2 * SWAP - np.eye(4), atol=1e-14)
        np.testing.assert_allclose(SWAP @ np.kron(ket("0"), ket("1")),
                                   np.kron(ket("1"), ket("0")), atol=1e-14)

    def test_named_states_are_valid(self):
        for name in ("singlet", "triplet-zz", "product-00", "maximally-mixed"):
            validate_state(named_state(name))
        with pytest.raises(DomainError):
            named_state("bogus")

    def test_fidelity_limits(self):
        rho = bell_singlet()
        assert state_fidelity(rho, rho) == pytest.approx(1.0, abs=1e-12)
        assert state_fidelity(rho, pure_density(ket("00"))) == pytest.approx(0.0, abs=1e-12)
