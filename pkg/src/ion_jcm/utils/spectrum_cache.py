"""
Shared cache of oracle eigendecompositions.
Provides singleton-like access per parameter set so that repeated evolutions
(verification runs, energy checks) do not diagonalize the same Hamiltonian twice.
"""
import threading
from dataclasses import dataclass
from typing import Any, Callable, Dict

import numpy as np


@dataclass(frozen=True)
class Spectrum:
    """H = D V diag(energies) V^T D^dagger with D = diag(phases)."""

    energies: np.ndarray
    vectors: np.ndarray
    phases: np.ndarray


_spectra: Dict[Any, Spectrum] = {}
_lock = threading.Lock()


def get_spectrum(h: Any, diagonalize: Callable[[Any], Spectrum]) -> Spectrum:
    """
    Returns the cached spectrum of `h`, keyed by its (frozen) params.
    Thread-safe initialization ensures each Hamiltonian is diagonalized only once.
    """
    key = h.params
    spectrum = _spectra.get(key)
    if spectrum is None:
        with _lock:
            # Double-check locking pattern
            spectrum = _spectra.get(key)
            if spectrum is None:
                spectrum = diagonalize(h)
                _spectra[key] = spectrum
    return spectrum


def clear_spectrum_cache() -> None:
    with _lock:
        _spectra.clear()
