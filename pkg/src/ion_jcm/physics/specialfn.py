"""
Associated Laguerre polynomials and factorial ratios.

Both are evaluated without forming large intermediates: the polynomials by the
three-term recurrence in degree (forward-stable for x >= 0), the ratios p!/q! in
log space.
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LaguerreEval:
    """A single evaluation point of L_n^k(x)."""

    n: int
    k: int
    x: float

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError(f"Laguerre degree and order must be nonnegative, got n={self.n}, k={self.k}")
        if not self.x >= 0:
            raise ValueError(f"Laguerre argument must be nonnegative, got x={self.x}")

    def evaluate(self) -> float:
        return float(laguerre_table(self.n, self.k, self.x)[-1])


def laguerre_table(n_max: int, k: int, x: float) -> np.ndarray:
    """Returns [L_0^k(x), ..., L_{n_max}^k(x)] from one recurrence pass.

    (m+1) L_{m+1} = (2m+k+1-x) L_m - (m+k) L_{m-1}
    """
    if n_max < 0 or k < 0:
        raise ValueError(f"Laguerre degree and order must be nonnegative, got n={n_max}, k={k}")
    values = np.empty(n_max + 1, dtype=float)
    values[0] = 1.0
    if n_max == 0:
        return values
    values[1] = 1.0 + k - x
    for m in range(1, n_max):
        values[m + 1] = ((2 * m + k + 1 - x) * values[m] - (m + k) * values[m - 1]) / (m + 1)
    return values


def laguerre(n: int, k: int, x: float) -> float:
    """L_n^k(x) for n, k >= 0 and x >= 0."""
    return LaguerreEval(n, k, x).evaluate()


def log_factorial_ratio(p: int, q: int) -> float:
    """ln(p!/q!) as a signed sum of logarithms.

    Swapping the arguments flips the sign exactly.
    """
    if p < 0 or q < 0:
        raise ValueError(f"factorial arguments must be nonnegative, got p={p}, q={q}")
    if p == q:
        return 0.0
    lo, hi = min(p, q), max(p, q)
    total = float(np.sum(np.log(np.arange(lo + 1, hi + 1, dtype=float))))
    return total if p > q else -total
