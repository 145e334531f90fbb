import math

import numpy as np
import pytest
import scipy.linalg

from ion_jcm.physics.coupling import ChainClass, ModelParams, chain_coefficients, coupling_operator_element
from ion_jcm.physics.propagator import PhaseConvention, chain_populations, chain_propagator


def params_for(k, eta=0.1):
    return ModelParams.from_lab_units(eta=eta, rabi_khz=500.0, k=k, n_max=80)


def chain_hamiltonian(params, n):
    """3x3 (or 2x2) Hermitian chain block assembled from operator elements."""
    k = params.k
    scale = math.sqrt(2) * params.rabi
    lower = scale * coupling_operator_element(params, n - k, n)
    if n < 2 * k:
        return np.array([[0, lower], [np.conj(lower), 0]], dtype=complex)
    upper = scale * coupling_operator_element(params, n - 2 * k, n - k)
    return np.array([
        [0, upper, 0],
        [np.conj(upper), 0, lower],
        [0, np.conj(lower), 0],
    ], dtype=complex)


def test_phase_conventions():
    assert PhaseConvention.for_order(1).cross == 1
    assert PhaseConvention.for_order(1).corner == 1
    assert PhaseConvention.for_order(2).cross == 1j
    assert PhaseConvention.for_order(2).corner == -1
    assert PhaseConvention.for_order(3).cross == -1
    assert PhaseConvention.for_order(4).cross == -1j


@pytest.mark.parametrize("n", [0, 1, 2, 10])
def test_identity_at_zero(n):
    c = chain_coefficients(params_for(1), n)
    block = chain_propagator(c, 0.0)
    np.testing.assert_array_equal(block.u, np.eye(block.u.shape[0]))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_half_period(k):
    c = chain_coefficients(params_for(k), 30)
    assert c.chain_class is ChainClass.FULL
    w2 = c.a_coef**2 + c.b_coef**2
    u = chain_propagator(c, math.pi / math.sqrt(w2)).u
    assert u[1, 1] == pytest.approx(-1.0, abs=1e-14)
    corner = (-1) ** (k + 1) * 2 * c.a_coef * c.b_coef / w2
    assert u[0, 2] == pytest.approx(corner, abs=1e-14)
    assert u[2, 0] == pytest.approx(corner, abs=1e-14)


def test_unitarity_random_samples():
    rng = np.random.default_rng(20240607)
    for _ in range(1000):
        eta = float(rng.uniform(0.05, 0.5))
        k = int(rng.integers(1, 4))
        n = int(rng.integers(0, 201))
        t = float(rng.uniform(0.0, 1e-3))
        params = ModelParams.from_lab_units(eta=eta, rabi_khz=500.0, k=k, n_max=200)
        u = chain_propagator(chain_coefficients(params, n), t).u
        np.testing.assert_allclose(u.conj().T @ u, np.eye(u.shape[0]), atol=1e-12)


@pytest.mark.parametrize("k,n", [(1, 1), (1, 25), (2, 3), (2, 40)])
def test_group_property(k, n):
    c = chain_coefficients(params_for(k, eta=0.2), n)
    t1, t2 = 3.7e-6, 11.2e-6
    combined = chain_propagator(c, t1).u @ chain_propagator(c, t2).u
    np.testing.assert_allclose(chain_propagator(c, t1 + t2).u, combined, atol=1e-12)


@pytest.mark.parametrize("k,n,eta", [(1, 10, 0.1), (1, 1, 0.1), (2, 10, 0.2), (2, 3, 0.2), (3, 17, 0.4)])
def test_matches_matrix_exponential(k, n, eta):
    params = params_for(k, eta=eta)
    c = chain_coefficients(params, n)
    t = 2e-6
    expected = scipy.linalg.expm(-1j * chain_hamiltonian(params, n) * t)
    u = chain_propagator(c, t).u
    # Magnitudes are convention free; the phases match exactly as well.
    np.testing.assert_allclose(np.abs(u) ** 2, np.abs(expected) ** 2, atol=1e-10)
    np.testing.assert_allclose(u, expected, atol=1e-10)


@pytest.mark.parametrize("k,eta", [(1, 0.1), (2, 0.2), (3, 0.4)])
def test_populations_match_eigendecomposition_for_all_chains(k, eta):
    params = ModelParams.from_lab_units(eta=eta, rabi_khz=500.0, k=k, n_max=100)
    times = np.linspace(0.0, 5e-5, 9)
    for n in range(params.n_max + 1):
        pops = chain_populations(chain_coefficients(params, n), times)
        if n < k:
            np.testing.assert_array_equal(pops[2], 1.0)
            continue
        energies, vectors = scipy.linalg.eigh(chain_hamiltonian(params, n))
        start = vectors.conj()[-1]
        for i, t in enumerate(times):
            column = vectors @ (np.exp(-1j * energies * t) * start)
            expected = np.zeros(3)
            expected[3 - column.size:] = np.abs(column) ** 2
            np.testing.assert_allclose(pops[:, i], expected, atol=1e-10)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 9, 40])
def test_populations_match_last_column(n):
    c = chain_coefficients(params_for(2, eta=0.4), n)
    times = np.linspace(0.0, 4e-5, 17)
    pops = chain_populations(c, times)
    assert pops.shape == (3, 17)
    for i, t in enumerate(times):
        column = np.abs(chain_propagator(c, t).u[:, -1]) ** 2
        padded = np.zeros(3)
        padded[3 - column.size:] = column
        np.testing.assert_allclose(pops[:, i], padded, atol=1e-13)
    np.testing.assert_allclose(pops.sum(axis=0), 1.0, atol=1e-13)


def test_rejects_negative_time():
    c = chain_coefficients(params_for(1), 5)
    with pytest.raises(ValueError):
        chain_propagator(c, -1e-6)
