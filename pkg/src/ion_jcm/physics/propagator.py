"""
Analytic time evolution of a single chain.

Rows and columns of a block follow the chain basis order
    Full:      (|1, n-2k>, |0, n-k>, |-1, n>)
    TwoLevel:  (|0, n-k>, |-1, n>)
    Frozen:    (|-1, n>,)
so the last column is always the image of the bottom state |-1, n>.
"""
from dataclasses import dataclass

import numpy as np

from ion_jcm.physics.coupling import ChainClass, ChainCoefficients, i_power, rabi_frequency


@dataclass(frozen=True)
class PhaseConvention:
    """Phase factors of the off-diagonal elements for sideband order k.

    cross multiplies the A sin and B sin elements above the diagonal (U_10, U_0-1);
    corner multiplies the AB(1 - cos) corner elements (U_1-1 = U_-11).
    """

    k: int
    cross: complex
    corner: int

    @classmethod
    def for_order(cls, k: int) -> "PhaseConvention":
        return cls(k=k, cross=-i_power(k + 1), corner=(-1) ** (k + 1))


@dataclass(frozen=True)
class PropagatorBlock:
    n: int
    t: float
    u: np.ndarray
    phase_convention: PhaseConvention


def chain_propagator(coeffs: ChainCoefficients, t: float) -> PropagatorBlock:
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    phases = PhaseConvention.for_order(coeffs.k)
    a, b = coeffs.a_coef, coeffs.b_coef

    if coeffs.chain_class is ChainClass.FROZEN:
        u = np.ones((1, 1), dtype=complex)

    elif coeffs.chain_class is ChainClass.TWO_LEVEL:
        c, s = np.cos(b * t), np.sin(b * t)
        u = np.array([
            [c, phases.cross * s],
            [-np.conj(phases.cross) * s, c],
        ], dtype=complex)

    else:
        omega = rabi_frequency(coeffs)
        if omega == 0.0:
            raise ValueError(f"full chain n={coeffs.n} has A = B = 0")
        w2 = omega * omega
        c, s = np.cos(omega * t), np.sin(omega * t)
        u10 = phases.cross * a * s / omega
        u0m1 = phases.cross * b * s / omega
        corner = phases.corner * a * b * (1 - c) / w2
        u = np.array([
            [(a * a * c + b * b) / w2, u10, corner],
            [-np.conj(u10), c, u0m1],
            [corner, -np.conj(u0m1), (b * b * c + a * a) / w2],
        ], dtype=complex)

    return PropagatorBlock(n=coeffs.n, t=t, u=u, phase_convention=phases)


def chain_populations(coeffs: ChainCoefficients, times: np.ndarray) -> np.ndarray:
    """Occupations |U_{j,-1}(t)|^2 of |1>, |0>, |-1> starting from |-1, n>.

    Returns an array of shape (3, len(times)); each column sums to 1.
    """
    times = np.asarray(times, dtype=float)
    out = np.zeros((3,) + times.shape, dtype=float)

    if coeffs.chain_class is ChainClass.FROZEN:
        out[2] = 1.0
    elif coeffs.chain_class is ChainClass.TWO_LEVEL:
        s = np.sin(coeffs.b_coef * times)
        c = np.cos(coeffs.b_coef * times)
        out[1] = s * s
        out[2] = c * c
    else:
        a2, b2 = coeffs.a_coef**2, coeffs.b_coef**2
        w2 = a2 + b2
        if w2 == 0.0:
            raise ValueError(f"full chain n={coeffs.n} has A = B = 0")
        omega_t = np.sqrt(w2) * times
        c, s = np.cos(omega_t), np.sin(omega_t)
        out[0] = a2 * b2 * (1 - c) ** 2 / (w2 * w2)
        out[1] = b2 * s * s / w2
        out[2] = (b2 * c + a2) ** 2 / (w2 * w2)
    return out
