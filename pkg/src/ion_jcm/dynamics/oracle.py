"""
Brute-force reference: the interaction Hamiltonian on the truncated space
{|1>, |0>, |-1>} x {|0>, ..., |n_max>}, evolved exactly by eigendecomposition.

Only the operator series in `coupling_operator_element` is shared with the analytic
path; nothing here touches the Laguerre recurrence, the chain coefficients or the
chain propagator.

Basis order: flat index = row(level) * (n_max + 1) + phonon, with rows
|1> -> 0, |0> -> 1, |-1> -> 2.
"""
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from ion_jcm.dynamics.states import DickeLevel, InitialMotionalState, PopulationTrace
from ion_jcm.errors import NumericalError
from ion_jcm.physics.coupling import ModelParams, coupling_operator_element, i_power
from ion_jcm.utils.spectrum_cache import Spectrum, get_spectrum

# <1|J+|0> = <0|J+|-1> = sqrt(2) in the order (|1>, |0>, |-1>).
J_PLUS = np.array([
    [0.0, math.sqrt(2), 0.0],
    [0.0, 0.0, math.sqrt(2)],
    [0.0, 0.0, 0.0],
])

# Dicke label j of each level row.
_DICKE_LABELS = (1, 0, -1)


@dataclass
class DenseHamiltonian:
    params: ModelParams
    elements: np.ndarray

    @property
    def dim(self) -> int:
        return self.elements.shape[0]

    @property
    def n_levels(self) -> int:
        """Phonon levels per Dicke level, n_max + 1."""
        return self.params.n_max + 1

    def index(self, level: DickeLevel, phonon: int) -> int:
        if not 0 <= phonon <= self.params.n_max:
            raise ValueError(f"phonon index {phonon} outside [0, {self.params.n_max}]")
        return DickeLevel(level).row * self.n_levels + phonon


def coupling_matrix(params: ModelParams) -> np.ndarray:
    """F = f(a^+a) a^k on the truncated Fock space."""
    size = params.n_max + 1
    f = np.zeros((size, size), dtype=complex)
    for row in range(size - params.k):
        f[row, row + params.k] = coupling_operator_element(params, row, row + params.k)
    return f


def build_hamiltonian(params: ModelParams) -> DenseHamiltonian:
    """H = Omega J+ (x) F + h.c., assembled from the strictly upper triangle."""
    upper = params.rabi * np.kron(J_PLUS, coupling_matrix(params))
    elements = upper + upper.conj().T
    return DenseHamiltonian(params=params, elements=elements)


def gauge_phases(h: DenseHamiltonian) -> np.ndarray:
    """Diagonal phases i^(k j) that make H real symmetric."""
    k = h.params.k
    return np.concatenate([np.full(h.n_levels, i_power(k * j)) for j in _DICKE_LABELS])


def diagonalize(h: DenseHamiltonian) -> Spectrum:
    """Eigendecomposition of the gauge-transformed, real symmetric Hamiltonian."""
    if not np.all(np.isfinite(h.elements)):
        raise NumericalError("Hamiltonian contains non-finite elements")
    phases = gauge_phases(h)
    rotated = np.conj(phases)[:, None] * h.elements * phases[None, :]
    scale = float(np.max(np.abs(rotated))) if rotated.size else 0.0
    if np.max(np.abs(rotated.imag), initial=0.0) > 1e-12 * max(scale, 1.0):
        raise NumericalError("gauge transform did not produce a real Hamiltonian")
    try:
        energies, vectors = scipy.linalg.eigh(rotated.real)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError, ValueError) as e:
        raise NumericalError(f"eigendecomposition failed: {e}") from e
    return Spectrum(energies=energies, vectors=vectors, phases=phases)


def evolve_state(h: DenseHamiltonian, psi0: np.ndarray, times: np.ndarray) -> np.ndarray:
    """psi(t) = exp(-iHt) psi0 for every t; returns shape (len(times), dim)."""
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (h.dim,):
        raise ValueError(f"state vector must have length {h.dim}")
    norm = float(np.vdot(psi0, psi0).real)
    if abs(norm - 1) > 1e-12:
        raise ValueError(f"state vector not normalized: |psi|^2 = {norm!r}")
    spectrum = get_spectrum(h, diagonalize)
    times = np.asarray(times, dtype=float)

    # Work in the real gauge: psi = D phi.
    coeffs = spectrum.vectors.T @ (np.conj(spectrum.phases) * psi0)
    phase = np.exp(-1j * np.outer(times, spectrum.energies))
    return (phase * coeffs[None, :]) @ spectrum.vectors.T * spectrum.phases[None, :]


def expectation(h: DenseHamiltonian, psi: np.ndarray) -> float:
    return float(np.vdot(psi, h.elements @ psi).real)


def evolve(
    h: DenseHamiltonian,
    initial: np.ndarray,
    times: np.ndarray,
    provenance: Optional[InitialMotionalState] = None,
) -> PopulationTrace:
    """Dicke-level populations under exact evolution.

    `initial` is either a full state vector (length dim) or mixture weights p(n)
    over |-1, n> (length <= n_max + 1). A mixture is evolved chain by chain and
    its missing weight is reported as the trace's tail_bound.
    """
    initial = np.asarray(initial)
    times = np.asarray(times, dtype=float)
    size = h.n_levels

    if initial.shape == (h.dim,):
        psi_t = evolve_state(h, initial, times)
        probs = np.abs(psi_t) ** 2
        pops = probs.reshape(times.size, 3, size).sum(axis=2).T
        tail_bound = 0.0
    else:
        weights = np.asarray(initial, dtype=float)
        if weights.ndim != 1 or weights.size > size:
            raise ValueError(f"mixture weights must be 1-D with at most {size} entries")
        if np.any(weights < 0) or float(np.sum(weights)) > 1 + 1e-12:
            raise ValueError("mixture weights must be nonnegative and sum to at most 1")
        pops = _evolve_mixture(h, weights, times)
        tail_bound = max(0.0, 1.0 - float(np.sum(weights)))

    print(f"[Oracle] dim={h.dim}: evolved {times.size} time points", file=sys.stderr, flush=True)
    return PopulationTrace(
        times=times,
        rho_11=pops[0],
        rho_00=pops[1],
        rho_m1m1=pops[2],
        params=h.params,
        initial=provenance,
        tail_bound=tail_bound,
    )


def _evolve_mixture(h: DenseHamiltonian, weights: np.ndarray, times: np.ndarray) -> np.ndarray:
    spectrum = get_spectrum(h, diagonalize)
    size = h.n_levels
    occupied = np.nonzero(weights > 0)[0]
    ground_rows = DickeLevel.GROUND.row * size + occupied
    # Phases on basis states do not change occupations, so stay in the real gauge.
    starts = spectrum.vectors[ground_rows, :].T  # (dim, n_occupied) eigen-coefficients
    w = weights[occupied]

    pops = np.zeros((3, times.size), dtype=float)
    for i, t in enumerate(times):
        amplitudes = spectrum.vectors @ (np.exp(-1j * spectrum.energies * t)[:, None] * starts)
        probs = (np.abs(amplitudes) ** 2) @ w
        pops[:, i] = probs.reshape(3, size).sum(axis=1)
    return pops


def compare(trace_a: PopulationTrace, trace_b: PopulationTrace) -> float:
    """Maximum absolute difference over all three occupations."""
    if trace_a.times.shape != trace_b.times.shape:
        raise ValueError("traces are on different time grids")
    return float(np.max(np.abs(trace_a.stacked() - trace_b.stacked())))
