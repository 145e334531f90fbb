"""Population dynamics: analytic chain sums and the brute-force oracle."""
from ion_jcm.dynamics.oracle import DenseHamiltonian, build_hamiltonian, compare, evolve, evolve_state, expectation
from ion_jcm.dynamics.populations import (
    mean_rabi_period,
    model_params_for,
    populations,
    weighted_rabi_frequency,
)
from ion_jcm.dynamics.states import (
    DickeLevel,
    InitialMotionalState,
    PopulationTrace,
    StateKind,
    phonon_distribution,
    required_n_max,
    truncation_tail,
)

__all__ = [
    "DenseHamiltonian",
    "DickeLevel",
    "InitialMotionalState",
    "PopulationTrace",
    "StateKind",
    "build_hamiltonian",
    "compare",
    "evolve",
    "evolve_state",
    "expectation",
    "mean_rabi_period",
    "model_params_for",
    "phonon_distribution",
    "populations",
    "required_n_max",
    "truncation_tail",
    "weighted_rabi_frequency",
]
