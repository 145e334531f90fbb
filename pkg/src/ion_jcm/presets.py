# Figure parameter bundles. Omega/2pi = 500 kHz throughout.

from dataclasses import dataclass
from typing import Dict


@dataclass(frozen=True)
class FigurePreset:
    eta: float
    k: int
    alpha_sq: float
    rabi_khz: float = 500.0


FIGURE_PRESETS: Dict[str, FigurePreset] = {
    "fig1": FigurePreset(eta=0.1, k=1, alpha_sq=10.0),
    "fig2a": FigurePreset(eta=0.2, k=1, alpha_sq=50.0),
    "fig2b": FigurePreset(eta=0.4, k=1, alpha_sq=80.0),
    "fig3a": FigurePreset(eta=0.1, k=2, alpha_sq=20.0),
    "fig3b": FigurePreset(eta=0.2, k=2, alpha_sq=50.0),
    "fig3c": FigurePreset(eta=0.4, k=2, alpha_sq=80.0),
}
