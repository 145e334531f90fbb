"""Collapse and revival analysis."""
from ion_jcm.analysis.envelope import (
    EnvelopeReport,
    contrast_sweep,
    default_window,
    envelope,
    harmonic,
    revival_estimate,
)

__all__ = ["EnvelopeReport", "contrast_sweep", "default_window", "envelope", "harmonic", "revival_estimate"]
