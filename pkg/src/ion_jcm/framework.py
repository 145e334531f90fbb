"""
ion-jcm facade.
Re-exports the analytic model, the brute-force oracle and the envelope analysis
so callers need a single import.
"""

from ion_jcm.physics.coupling import ModelParams, chain_coefficients, chain_table, rabi_frequency  # noqa: F401
from ion_jcm.physics.propagator import chain_populations, chain_propagator  # noqa: F401
from ion_jcm.dynamics.states import DickeLevel, InitialMotionalState, PopulationTrace  # noqa: F401
from ion_jcm.dynamics.populations import model_params_for, populations  # noqa: F401
from ion_jcm.dynamics.oracle import build_hamiltonian, compare, evolve  # noqa: F401
from ion_jcm.analysis.envelope import envelope, revival_estimate  # noqa: F401
from ion_jcm.presets import FIGURE_PRESETS  # noqa: F401

from ion_jcm.config import (  # noqa: F401
    TAIL_TOL,
    VERIFY_TOL,
    OUTPUT_DIR,
)
