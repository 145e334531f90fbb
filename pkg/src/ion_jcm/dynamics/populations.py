"""
Population traces from the analytic solution.

Each chain starting in |-1, n> contributes |U_{j,-1}(t)|^2 weighted by p(n); the
sum runs over n in ascending order so rounding does not depend on evaluation order,
and every summed occupation is clipped into [0, 1].
"""
import math
import sys
from typing import Optional

import numpy as np

from ion_jcm.config import TAIL_TOL, TRUNCATION_MARGIN
from ion_jcm.dynamics.states import (
    InitialMotionalState,
    PopulationTrace,
    phonon_distribution,
    required_n_max,
    truncation_tail,
)
from ion_jcm.physics.coupling import ModelParams, chain_table, rabi_frequency
from ion_jcm.physics.propagator import chain_populations
from ion_jcm.workers.grid import run_on_grid


def model_params_for(
    eta: float,
    rabi: float,
    k: int,
    state: InitialMotionalState,
    tail_tol: float = TAIL_TOL,
    n_max: Optional[int] = None,
    margin: int = TRUNCATION_MARGIN,
) -> ModelParams:
    """ModelParams whose truncation suits the given initial state."""
    if n_max is None:
        n_max = max(required_n_max(state, tail_tol, margin), 2 * k)
    return ModelParams(eta=eta, rabi=rabi, k=k, n_max=n_max, tail_tol=tail_tol)


def _check_times(times: np.ndarray) -> np.ndarray:
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("time grid must be a nonempty 1-D array")
    if not np.all(np.isfinite(times)) or times[0] < 0:
        raise ValueError("time grid must be finite and >= 0")
    if np.any(np.diff(times) < 0):
        raise ValueError("time grid must be nondecreasing")
    return times


def populations(
    params: ModelParams,
    state: InitialMotionalState,
    times: np.ndarray,
    threads: Optional[int] = None,
) -> PopulationTrace:
    times = _check_times(times)
    weights = phonon_distribution(state, params.n_max, params.tail_tol)
    tail_bound = truncation_tail(state, params.n_max)

    # Chains with zero weight contribute nothing; keep ascending order.
    chains = [c for c in chain_table(params) if weights[c.n] > 0]
    out = np.zeros((3, times.size), dtype=float)

    def evaluate(chunk: slice):
        t = times[chunk]
        acc = np.zeros((3, t.size), dtype=float)
        for coeffs in chains:
            acc += weights[coeffs.n] * chain_populations(coeffs, t)
        # Occupations are probabilities; drop the last-ulp excursions of the sum.
        out[:, chunk] = np.clip(acc, 0.0, 1.0)

    run_on_grid(evaluate, times.size, threads=threads)
    print(
        f"[Dynamics] eta={params.eta} k={params.k} n_max={params.n_max}: "
        f"{len(chains)} chains x {times.size} time points, tail {tail_bound:.2e}",
        file=sys.stderr,
        flush=True,
    )
    return PopulationTrace(
        times=times,
        rho_11=out[0],
        rho_00=out[1],
        rho_m1m1=out[2],
        params=params,
        initial=state,
        tail_bound=tail_bound,
    )


def weighted_rabi_frequency(params: ModelParams, state: InitialMotionalState) -> float:
    """Mean chain frequency sqrt(A^2 + B^2) under the initial phonon distribution."""
    weights = phonon_distribution(state, params.n_max, params.tail_tol)
    freqs = np.array([rabi_frequency(c) for c in chain_table(params)])
    total = float(np.sum(weights))
    if total == 0:
        return 0.0
    return float(np.dot(weights, freqs) / total)


def mean_rabi_period(params: ModelParams, state: InitialMotionalState) -> float:
    omega = weighted_rabi_frequency(params, state)
    return math.inf if omega == 0 else 2 * math.pi / omega
