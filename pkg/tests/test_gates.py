import math

import numpy as np
import pytest

from qrbs.gates import (
    H,
    IDENTITY,
    KET_0,
    M,
    S,
    T,
    X,
    Z,
    Gate,
    dagger,
    is_unitary,
    mat_mul,
    matrix_of,
    modulus_amplitudes,
    product_action_on_ket0,
)

SQRT2 = math.sqrt(2.0)
CATALOG = (X, H, S, T, Z)


def test_catalog_matrices_match_definitions():
    assert np.array_equal(matrix_of(Z), np.diag([1.0, -1.0]).astype(complex))
    assert np.array_equal(matrix_of(X), np.array([[0, 1], [1, 0]], dtype=complex))
    assert np.allclose(matrix_of(H), np.array([[1, 1], [1, -1]]) / SQRT2, atol=0)
    assert np.array_equal(matrix_of(S), np.diag([1.0, 1j]))
    assert np.allclose(matrix_of(T), np.diag([1.0, (1 + 1j) / SQRT2]), atol=1e-16)


def test_m_matrix_is_the_sin_cos_reflection():
    theta = 0.3
    m = matrix_of(M(theta))
    s, c = math.sin(theta), math.cos(theta)
    assert np.array_equal(m, np.array([[s, c], [c, -s]], dtype=complex))


def test_m_of_pi_quarter_has_equal_entries():
    m = matrix_of(M(math.pi / 4))
    v = 1 / SQRT2
    assert np.allclose(m, [[v, v], [v, -v]], atol=5e-6)


def test_m_of_zero_equals_x():
    assert np.allclose(matrix_of(M(0.0)), matrix_of(X), atol=1e-16)


def test_catalog_is_closed():
    with pytest.raises(ValueError):
        Gate("Q")
    with pytest.raises(ValueError):
        Gate("H", theta=0.1)
    with pytest.raises(ValueError):
        M(float("nan"))


def test_mat_mul_identities():
    h = matrix_of(H)
    assert np.allclose(mat_mul(h, h), IDENTITY, atol=1e-15)
    assert np.allclose(mat_mul(h, mat_mul(matrix_of(Z), h)), matrix_of(X), atol=1e-15)
    assert np.allclose(mat_mul(IDENTITY, matrix_of(X)), matrix_of(X), atol=0)


def test_dagger():
    assert np.array_equal(dagger(matrix_of(S)), np.diag([1.0, -1j]))
    assert np.allclose(dagger(matrix_of(H)), matrix_of(H), atol=0)
    assert np.allclose(dagger(dagger(matrix_of(T))), matrix_of(T), atol=0)


@pytest.mark.parametrize("gate", CATALOG)
def test_catalog_gates_unitary(gate):
    assert is_unitary(matrix_of(gate), 1e-12)
    assert np.max(np.abs(mat_mul(matrix_of(gate), dagger(matrix_of(gate))) - IDENTITY)) <= 1e-12


def test_m_self_inverse_for_random_angles():
    rng = np.random.default_rng(42)
    for theta in rng.uniform(0.0, math.pi, size=100):
        m = matrix_of(M(theta))
        assert np.max(np.abs(mat_mul(m, m) - IDENTITY)) <= 1e-12
        assert is_unitary(m, 1e-12)


def test_is_unitary_rejects_scaled_matrix():
    assert not is_unitary(np.diag([2.0, 1.0]).astype(complex), 1e-12)


def test_is_unitary_requires_positive_tol():
    with pytest.raises(ValueError):
        is_unitary(IDENTITY, 0.0)


def test_hth_matrix_entries():
    # independent closed form: diagonal (2+sqrt2+i·sqrt2)/4, off-diagonal conjugate-ish
    hth = mat_mul(matrix_of(H), mat_mul(matrix_of(T), matrix_of(H)))
    diag = (2 + SQRT2 + 1j * SQRT2) / 4
    off = (2 - SQRT2 - 1j * SQRT2) / 4
    assert np.allclose(hth, [[diag, off], [off, diag]], atol=1e-12)


# prob0 closed forms: 1, cos^2(pi/8), 1/2, sin^2(pi/8), 0
COMPOSITES = [
    ([H, H], 1.0, 1.00),
    ([H, T, H], math.cos(math.pi / 8) ** 2, 0.854),
    ([H, S, H], 0.5, 0.500),
    ([H, S, T, H], math.sin(math.pi / 8) ** 2, 0.147),
    ([H, Z, H], 0.0, 0.00),
]


@pytest.mark.parametrize("gates,closed_form,printed", COMPOSITES)
def test_composite_products_on_ket0(gates, closed_form, printed):
    action = product_action_on_ket0(gates)
    assert action.prob0 == pytest.approx(closed_form, abs=1e-9)
    assert action.prob0 == pytest.approx(printed, abs=5e-3)
    assert action.prob0 + action.prob1 == pytest.approx(1.0, abs=1e-12)


def test_hsth_moduli():
    action = product_action_on_ket0([H, S, T, H])
    assert abs(action.amp0) == pytest.approx(0.383, abs=5e-4)
    assert abs(action.amp1) == pytest.approx(0.924, abs=5e-4)


def test_product_action_rejects_empty_list():
    with pytest.raises(ValueError):
        product_action_on_ket0([])


def test_product_action_single_h():
    action = product_action_on_ket0([H])
    assert abs(action.amp0) == pytest.approx(1 / SQRT2, abs=1e-15)
    assert abs(action.amp1) == pytest.approx(1 / SQRT2, abs=1e-15)


def test_modulus_amplitudes_drops_phases():
    a = (2 + SQRT2 + 1j * SQRT2) / 4
    b = (2 - SQRT2 - 1j * SQRT2) / 4
    m0, m1 = modulus_amplitudes((a, b))
    assert m0 == pytest.approx(0.924, abs=5e-4)
    assert m1 == pytest.approx(0.383, abs=5e-4)
    assert m0**2 + m1**2 == pytest.approx(1.0, abs=1e-9)


def test_modulus_amplitudes_basis_state():
    assert modulus_amplitudes((1.0, 0.0)) == (1.0, 0.0)


def test_modulus_amplitudes_imaginary_pair():
    m0, m1 = modulus_amplitudes((1j / SQRT2, 1 / SQRT2))
    assert m0 == pytest.approx(0.70711, abs=1e-5)
    assert m1 == pytest.approx(0.70711, abs=1e-5)


def test_modulus_amplitudes_rejects_unnormalized():
    with pytest.raises(ValueError):
        modulus_amplitudes((1.0, 1.0))


def test_ket0_is_basis_vector():
    assert np.array_equal(KET_0, np.array([1, 0], dtype=complex))
