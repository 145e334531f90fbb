"""
Collapse and revival quantified from a population trace.

The trace is cut into non-overlapping windows of fixed duration; the oscillation
amplitude of a window is max - min of the chosen occupation inside it. A collapse
is the first window whose amplitude drops below COLLAPSE_FRAC of the first
window's; a revival is the first later window back above REVIVAL_FRAC of it.
"""
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ion_jcm.config import COLLAPSE_FRAC, REVIVAL_FRAC, TAIL_TOL, WINDOW_PERIODS
from ion_jcm.dynamics.populations import mean_rabi_period, model_params_for, populations
from ion_jcm.dynamics.states import DickeLevel, InitialMotionalState, PopulationTrace
from ion_jcm.errors import InsufficientDataError
from ion_jcm.physics.coupling import ModelParams, chain_coefficients, rabi_frequency

MIN_WINDOWS = 3


@dataclass(frozen=True)
class EnvelopeReport:
    which: DickeLevel
    window: float
    window_centers: np.ndarray
    amplitudes: np.ndarray
    collapse_found: bool
    collapse_time: Optional[float]
    revival_found: bool
    revival_time: Optional[float]
    contrast: float

    def to_dict(self) -> dict:
        return {
            "which": self.which.value,
            "window_us": self.window * 1e6,
            "window_centers_us": [float(t) * 1e6 for t in self.window_centers],
            "amplitudes": [float(a) for a in self.amplitudes],
            "collapse_found": self.collapse_found,
            "collapse_time_us": None if self.collapse_time is None else self.collapse_time * 1e6,
            "revival_found": self.revival_found,
            "revival_time_us": None if self.revival_time is None else self.revival_time * 1e6,
            "contrast": self.contrast,
        }


def envelope(
    trace: PopulationTrace,
    which: DickeLevel,
    window: float,
    collapse_frac: float = COLLAPSE_FRAC,
    revival_frac: float = REVIVAL_FRAC,
) -> EnvelopeReport:
    which = DickeLevel(which)
    if not window > 0:
        raise ValueError(f"window must be > 0, got {window}")
    times = trace.times
    values = trace.level(which)
    start = float(times[0])
    n_windows = int(math.floor((float(times[-1]) - start) / window))
    if n_windows < MIN_WINDOWS:
        raise InsufficientDataError(
            f"trace spans {n_windows} window(s) of {window:.3e} s; at least {MIN_WINDOWS} are needed"
        )

    slots = np.floor((times - start) / window).astype(int)
    amplitudes = np.zeros(n_windows, dtype=float)
    for i in range(n_windows):
        inside = values[slots == i]
        if inside.size:
            amplitudes[i] = float(inside.max() - inside.min())
    centers = start + (np.arange(n_windows) + 0.5) * window

    reference = amplitudes[0]
    collapse_idx = _first_index(amplitudes < collapse_frac * reference, begin=1)
    revival_idx = None
    if collapse_idx is not None:
        revival_idx = _first_index(amplitudes > revival_frac * reference, begin=collapse_idx + 1)

    return EnvelopeReport(
        which=which,
        window=window,
        window_centers=centers,
        amplitudes=amplitudes,
        collapse_found=collapse_idx is not None,
        collapse_time=None if collapse_idx is None else float(centers[collapse_idx]),
        revival_found=revival_idx is not None,
        revival_time=None if revival_idx is None else float(centers[revival_idx]),
        contrast=_contrast(amplitudes[1:]),
    )


def _first_index(mask: np.ndarray, begin: int) -> Optional[int]:
    hits = np.nonzero(mask[begin:])[0]
    return int(hits[0]) + begin if hits.size else None


def _contrast(amplitudes: np.ndarray) -> float:
    """Coefficient of variation of the window amplitudes."""
    mean = float(np.mean(amplitudes)) if amplitudes.size else 0.0
    if mean == 0:
        return 0.0
    return float(np.std(amplitudes)) / mean


def harmonic(which: DickeLevel) -> int:
    # rho_00 chain terms go as sin^2(wt), i.e. oscillate at 2w.
    return 2 if DickeLevel(which) is DickeLevel.MIDDLE else 1


def revival_estimate(params: ModelParams, alpha_sq: float, which: DickeLevel = DickeLevel.EXCITED) -> float:
    """First-order revival time 2 pi / (h |Delta|).

    Delta is the step in chain frequency between n = round(|alpha|^2) and n + 1,
    h the harmonic at which the chosen occupation oscillates.
    """
    n_bar = int(round(alpha_sq))
    if n_bar + 1 > params.n_max:
        raise ValueError(f"n_max={params.n_max} too small for n_bar={n_bar}")
    delta = rabi_frequency(chain_coefficients(params, n_bar + 1)) - rabi_frequency(chain_coefficients(params, n_bar))
    if delta == 0:
        return math.inf
    return 2 * math.pi / (harmonic(which) * abs(delta))


def default_window(params: ModelParams, state: InitialMotionalState, periods: float = WINDOW_PERIODS) -> float:
    """`periods` oscillation periods of the Poisson-weighted mean chain frequency."""
    return periods * mean_rabi_period(params, state)


def contrast_sweep(
    eta: float,
    rabi: float,
    k: int,
    alpha_sqs: Sequence[float],
    which: DickeLevel = DickeLevel.EXCITED,
    span: float = 4.0,
    samples_per_period: int = 40,
    tail_tol: float = TAIL_TOL,
) -> List[Tuple[float, EnvelopeReport]]:
    """Envelope reports over a sweep of mean phonon numbers.

    Each trace covers `span` estimated revival times with the default window.
    """
    still = [alpha_sq for alpha_sq in alpha_sqs if not alpha_sq > 0]
    if still:
        # The vacuum never leaves |-1, 0>, so it has no period to window by.
        raise ValueError(f"contrast sweep needs |alpha|^2 > 0; drop {still} from the sweep")
    reports = []
    for alpha_sq in alpha_sqs:
        state = InitialMotionalState.coherent(alpha_sq)
        params = model_params_for(eta, rabi, k, state, tail_tol=tail_tol)
        window = default_window(params, state)
        t_max = span * revival_estimate(params, alpha_sq, which)
        n_points = max(2, int(math.ceil(samples_per_period * t_max / mean_rabi_period(params, state))) + 1)
        trace = populations(params, state, np.linspace(0.0, t_max, n_points))
        reports.append((alpha_sq, envelope(trace, which, window)))
    return reports
