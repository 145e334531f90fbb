"""Special functions, chain couplings and the analytic chain propagator."""
from ion_jcm.physics.coupling import (
    ChainClass,
    ChainCoefficients,
    ModelParams,
    chain_coefficients,
    chain_table,
    coupling_operator_element,
    rabi_frequency,
)
from ion_jcm.physics.propagator import PhaseConvention, PropagatorBlock, chain_populations, chain_propagator
from ion_jcm.physics.specialfn import LaguerreEval, laguerre, laguerre_table, log_factorial_ratio

__all__ = [
    "ChainClass",
    "ChainCoefficients",
    "LaguerreEval",
    "ModelParams",
    "PhaseConvention",
    "PropagatorBlock",
    "chain_coefficients",
    "chain_populations",
    "chain_propagator",
    "chain_table",
    "coupling_operator_element",
    "laguerre",
    "laguerre_table",
    "log_factorial_ratio",
    "rabi_frequency",
]
