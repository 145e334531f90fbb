"""Domain errors. Each carries the exit code the command line maps it to."""
from typing import Optional

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TRUNCATION = 3
EXIT_MISMATCH = 4
EXIT_NUMERICAL = 5


class JCMError(Exception):
    exit_code = 1


class ConfigError(JCMError):
    """Invalid run configuration."""

    exit_code = EXIT_USAGE


class InsufficientDataError(JCMError):
    """The time grid is too short for the requested analysis."""

    exit_code = EXIT_USAGE


class TruncationError(JCMError):
    """The Fock truncation discards more probability than allowed."""

    exit_code = EXIT_TRUNCATION

    def __init__(self, message: str, required_n_max: Optional[int] = None):
        super().__init__(message)
        self.required_n_max = required_n_max


class VerificationError(JCMError):
    """Analytic and brute-force populations disagree beyond tolerance."""

    exit_code = EXIT_MISMATCH

    def __init__(self, max_error: float, tol: float):
        super().__init__(f"max abs population error {max_error:.3e} exceeds tolerance {tol:.3e}")
        self.max_error = max_error
        self.tol = tol


class NumericalError(JCMError):
    exit_code = EXIT_NUMERICAL
