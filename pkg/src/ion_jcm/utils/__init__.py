"""Utils module for ion-jcm."""
from ion_jcm.utils.spectrum_cache import Spectrum, clear_spectrum_cache, get_spectrum

__all__ = ["Spectrum", "clear_spectrum_cache", "get_spectrum"]
