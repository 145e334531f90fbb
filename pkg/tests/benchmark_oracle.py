import time

import numpy as np

from ion_jcm.config import ORACLE_BUFFER
from ion_jcm.dynamics.oracle import build_hamiltonian, compare, evolve
from ion_jcm.dynamics.populations import model_params_for, populations
from ion_jcm.dynamics.states import InitialMotionalState, phonon_distribution
from ion_jcm.presets import FIGURE_PRESETS
from ion_jcm.utils.spectrum_cache import clear_spectrum_cache


def benchmark_preset(figure_id, t_points=200, t_max_us=300.0):
    preset = FIGURE_PRESETS[figure_id]
    print(f"--- {figure_id}: eta={preset.eta}, k={preset.k}, |alpha|^2={preset.alpha_sq:g} ---")
    state = InitialMotionalState.coherent(preset.alpha_sq)
    params = model_params_for(preset.eta, 2 * np.pi * preset.rabi_khz * 1e3, preset.k, state)
    times = np.linspace(0.0, t_max_us * 1e-6, t_points)

    # 1. Analytic chain sum
    start_time = time.time()
    analytic = populations(params, state, times)
    analytic_time = time.time() - start_time
    print(f"Analytic: n_max={params.n_max}, {analytic_time:.4f}s")

    # 2. Brute-force oracle, including diagonalization
    clear_spectrum_cache()
    oracle_params = params.with_n_max(params.n_max + ORACLE_BUFFER)
    weights = phonon_distribution(state, params.n_max)
    start_time = time.time()
    oracle = evolve(build_hamiltonian(oracle_params), weights, times)
    oracle_time = time.time() - start_time
    print(f"Oracle: dim={3 * (oracle_params.n_max + 1)}, {oracle_time:.4f}s")

    print(f"Max abs error: {compare(analytic, oracle):.3e}")
    print(f"Speedup Factor: {oracle_time / max(analytic_time, 1e-9):.1f}x")


if __name__ == "__main__":
    for figure_id in FIGURE_PRESETS:
        benchmark_preset(figure_id)
