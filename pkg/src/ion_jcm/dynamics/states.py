"""
Initial motional states, their phonon-number distributions, and population traces.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from ion_jcm.config import TAIL_TOL, TRUNCATION_MARGIN
from ion_jcm.errors import TruncationError
from ion_jcm.physics.coupling import ModelParams


class StateKind(str, Enum):
    COHERENT = "coherent"
    FOCK = "fock"


class DickeLevel(str, Enum):
    """Collective two-ion levels, named after their trace columns."""

    EXCITED = "rho_11"   # |1>, both ions excited
    MIDDLE = "rho_00"    # |0>, one excitation shared
    GROUND = "rho_m1m1"  # |-1>, both ions in ground

    @property
    def row(self) -> int:
        """Row of this level in (3, T) population arrays and chain blocks."""
        return _LEVEL_ROWS[self]


_LEVEL_ROWS = {DickeLevel.EXCITED: 0, DickeLevel.MIDDLE: 1, DickeLevel.GROUND: 2}


@dataclass(frozen=True)
class InitialMotionalState:
    kind: StateKind
    alpha_sq: float = 0.0
    n0: int = 0

    def __post_init__(self):
        if self.kind is StateKind.COHERENT and not self.alpha_sq >= 0:
            raise ValueError(f"alpha_sq must be >= 0, got {self.alpha_sq}")
        if self.kind is StateKind.FOCK and self.n0 < 0:
            raise ValueError(f"Fock index must be >= 0, got {self.n0}")

    @classmethod
    def coherent(cls, alpha_sq: float) -> "InitialMotionalState":
        return cls(kind=StateKind.COHERENT, alpha_sq=float(alpha_sq))

    @classmethod
    def fock(cls, n0: int) -> "InitialMotionalState":
        return cls(kind=StateKind.FOCK, n0=int(n0))

    @property
    def mean_phonons(self) -> float:
        return self.alpha_sq if self.kind is StateKind.COHERENT else float(self.n0)

    def weights(self, n_max: int, tail_tol: float = TAIL_TOL) -> np.ndarray:
        return phonon_distribution(self, n_max, tail_tol)

    def to_dict(self) -> dict:
        if self.kind is StateKind.COHERENT:
            return {"kind": self.kind.value, "alpha_sq": self.alpha_sq}
        return {"kind": self.kind.value, "n0": self.n0}

    @classmethod
    def from_dict(cls, data: dict) -> "InitialMotionalState":
        if data["kind"] == StateKind.COHERENT.value:
            return cls.coherent(data["alpha_sq"])
        return cls.fock(data["n0"])


def truncation_tail(state: InitialMotionalState, n_max: int) -> float:
    """Probability carried by phonon numbers above n_max."""
    if state.kind is StateKind.FOCK:
        return 0.0 if state.n0 <= n_max else 1.0
    if state.alpha_sq == 0:
        return 0.0
    return float(poisson.sf(n_max, state.alpha_sq))


def required_n_max(state: InitialMotionalState, tail_tol: float = TAIL_TOL, margin: int = TRUNCATION_MARGIN) -> int:
    """Smallest n whose Poisson tail is below tail_tol, plus a safety margin."""
    if state.kind is StateKind.FOCK:
        return state.n0 + margin
    mean = state.alpha_sq
    if mean == 0:
        return margin
    upper = int(math.ceil(mean + 40 * math.sqrt(mean) + 40))
    ns = np.arange(upper + 1)
    below = np.nonzero(poisson.sf(ns, mean) < tail_tol)[0]
    first = int(below[0]) if below.size else upper
    return first + margin


def phonon_distribution(state: InitialMotionalState, n_max: int, tail_tol: float = TAIL_TOL) -> np.ndarray:
    """p(n) for n = 0..n_max.

    Coherent weights are evaluated per n in log space, n ln|alpha|^2 - |alpha|^2 - ln n!,
    so rounding does not accumulate along n. Fock weights are a delta. Raises
    TruncationError when more than tail_tol of the probability lies above n_max.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    weights = np.zeros(n_max + 1, dtype=float)

    if state.kind is StateKind.FOCK:
        if state.n0 > n_max:
            raise TruncationError(
                f"Fock state n0={state.n0} lies above n_max={n_max}",
                required_n_max=required_n_max(state, tail_tol),
            )
        weights[state.n0] = 1.0
        return weights

    mean = state.alpha_sq
    if mean == 0:
        weights[0] = 1.0
        return weights

    tail = truncation_tail(state, n_max)
    if tail > tail_tol:
        needed = required_n_max(state, tail_tol)
        raise TruncationError(
            f"n_max={n_max} discards {tail:.3e} of the phonon distribution (> {tail_tol:.1e}); use n_max >= {needed}",
            required_n_max=needed,
        )

    ns = np.arange(n_max + 1, dtype=float)
    return np.exp(ns * math.log(mean) - mean - gammaln(ns + 1))


@dataclass
class PopulationTrace:
    """Occupations of the three Dicke levels over a time grid (seconds)."""

    times: np.ndarray
    rho_11: np.ndarray
    rho_00: np.ndarray
    rho_m1m1: np.ndarray
    params: ModelParams
    initial: Optional[InitialMotionalState]
    tail_bound: float

    def level(self, which: DickeLevel) -> np.ndarray:
        return getattr(self, DickeLevel(which).value)

    def total(self) -> np.ndarray:
        return self.rho_11 + self.rho_00 + self.rho_m1m1

    def stacked(self) -> np.ndarray:
        """(3, T) array in level-row order."""
        return np.vstack([self.rho_11, self.rho_00, self.rho_m1m1])
