"""
Chain coupling coefficients of the analytic solution and, independently, matrix
elements of the nonlinear coupling operator f(a^+a) a^k.

A chain with bottom state |-1, n> spans {|1, n-2k>, |0, n-k>, |-1, n>}. Its two
couplings are

    A(n) = sqrt(2) Omega e^{-eta^2/2} eta^k sqrt((n-2k)!/(n-k)!) L^k_{n-2k}(eta^2)
    B(n) = sqrt(2) Omega e^{-eta^2/2} eta^k sqrt((n-k)!/n!)      L^k_{n-k}(eta^2)

Both are real; the i^k phase of the operator element is carried by the propagator.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import List

import numpy as np

from ion_jcm.config import SERIES_CUTOFF, TAIL_TOL
from ion_jcm.physics.specialfn import laguerre, log_factorial_ratio

# Exact powers of i.
_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


def i_power(p: int) -> complex:
    return _I_POWERS[p % 4]


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs and numerical controls.

    eta: Lamb-Dicke parameter. rabi: Omega in rad/s. k: sideband order.
    n_max: Fock truncation (highest phonon index kept). tail_tol: allowed discarded
    probability of the initial phonon distribution.
    """

    eta: float
    rabi: float
    k: int
    n_max: int
    tail_tol: float = TAIL_TOL

    def __post_init__(self):
        if not self.eta > 0:
            raise ValueError(f"eta must be > 0, got {self.eta}")
        if not self.rabi > 0:
            raise ValueError(f"rabi must be > 0, got {self.rabi}")
        if self.k < 1:
            raise ValueError(f"sideband order k must be >= 1, got {self.k}")
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if not 0 < self.tail_tol < 1:
            raise ValueError(f"tail_tol must lie in (0, 1), got {self.tail_tol}")

    @classmethod
    def from_lab_units(cls, eta: float, rabi_khz: float, k: int, n_max: int, tail_tol: float = TAIL_TOL) -> "ModelParams":
        """Builds params from Omega/2pi given in kHz."""
        return cls(eta=eta, rabi=2 * math.pi * rabi_khz * 1e3, k=k, n_max=n_max, tail_tol=tail_tol)

    @property
    def rabi_khz(self) -> float:
        return self.rabi / (2 * math.pi * 1e3)

    def with_n_max(self, n_max: int) -> "ModelParams":
        return ModelParams(eta=self.eta, rabi=self.rabi, k=self.k, n_max=n_max, tail_tol=self.tail_tol)


class ChainClass(str, Enum):
    FULL = "full"            # n >= 2k: three coupled states
    TWO_LEVEL = "two_level"  # k <= n < 2k: |1, n-2k> does not exist
    FROZEN = "frozen"        # n < k: nothing to absorb


@dataclass(frozen=True)
class ChainCoefficients:
    n: int
    k: int
    a_coef: float
    b_coef: float
    chain_class: ChainClass


def classify(n: int, k: int) -> ChainClass:
    if n >= 2 * k:
        return ChainClass.FULL
    if n >= k:
        return ChainClass.TWO_LEVEL
    return ChainClass.FROZEN


def _prefactor(params: ModelParams) -> float:
    # Omega first, so that scaling rabi by 2 scales A and B exactly.
    return params.rabi * math.sqrt(2) * math.exp(-params.eta**2 / 2) * params.eta**params.k


def chain_coefficients(params: ModelParams, n: int) -> ChainCoefficients:
    if not 0 <= n <= params.n_max:
        raise ValueError(f"phonon index {n} outside [0, {params.n_max}]")
    k = params.k
    x = params.eta**2
    chain_class = classify(n, k)
    pre = _prefactor(params)
    a_coef = 0.0
    b_coef = 0.0
    if chain_class is not ChainClass.FROZEN:
        b_coef = pre * math.exp(0.5 * log_factorial_ratio(n - k, n)) * laguerre(n - k, k, x)
    if chain_class is ChainClass.FULL:
        a_coef = pre * math.exp(0.5 * log_factorial_ratio(n - 2 * k, n - k)) * laguerre(n - 2 * k, k, x)
    return ChainCoefficients(n=n, k=k, a_coef=a_coef, b_coef=b_coef, chain_class=chain_class)


def chain_table(params: ModelParams) -> List[ChainCoefficients]:
    """Coefficients of every chain n = 0..n_max, ascending."""
    return [chain_coefficients(params, n) for n in range(params.n_max + 1)]


def rabi_frequency(coeffs: ChainCoefficients) -> float:
    """Oscillation frequency of the chain, sqrt(A^2 + B^2)."""
    return math.hypot(coeffs.a_coef, coeffs.b_coef)


def coupling_operator_element(params: ModelParams, row: int, col: int) -> complex:
    """<row| f(a^+a) a^k |col> by direct summation of the operator series.

    f(a^+a) = e^{-eta^2/2} sum_j (i eta)^{2j+k} / (j! (j+k)!) (a^+)^j a^j
    Nonzero only for col = row + k.
    """
    for index in (row, col):
        if not 0 <= index <= params.n_max:
            raise ValueError(f"Fock index {index} outside [0, {params.n_max}]")
    k = params.k
    if col != row + k:
        return 0j

    x = params.eta**2
    # j-th term: (-x)^j / (j! (j+k)!) * row!/(row-j)!; (a^+)^j a^j vanishes on |row> for j > row.
    term = 1.0 / math.factorial(k)
    total = term
    for j in range(row):
        term *= -x * (row - j) / ((j + 1) * (j + 1 + k))
        total += term
        if abs(term) < SERIES_CUTOFF * abs(total):
            break

    # a^k |row+k> = sqrt((row+k)!/row!) |row>
    lowering = float(np.prod(np.sqrt(np.arange(row + 1, row + k + 1, dtype=float))))
    return math.exp(-x / 2) * i_power(k) * params.eta**k * total * lowering
