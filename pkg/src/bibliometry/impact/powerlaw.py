"""Rank-frequency power-law fit of a citation distribution.

Counts are sorted descending and assigned ranks 1..n; ordinary least
squares on (ln rank, ln count) gives count = scale * rank**(-exponent).
Goodness of fit is the coefficient of determination computed in log space.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from ..errors import InsufficientDataError


@dataclass(frozen=True)
class PowerLawFit:
    scale: float        # fitted count of the rank-1 item
    exponent: float
    r_squared: float | None   # None when ln-count variance is zero
    n_points: int


def fit_power_law(citation_counts: Iterable[float]) -> PowerLawFit:
    """Fit ranked positive counts; zero-count works are dropped first.

    Raises InsufficientDataError with fewer than 2 positive counts.
    """
    counts = np.asarray([c for c in citation_counts if c > 0], dtype=float)
    if counts.size < 2:
        raise InsufficientDataError(
            f"power-law fit needs >= 2 positive counts, got {counts.size}")
    counts[::-1].sort()  # descending
    log_rank = np.log(np.arange(1, counts.size + 1, dtype=float))
    log_count = np.log(counts)

    if np.ptp(log_count) == 0.0:
        # constant counts: slope 0, fit quality undefined (zero variance)
        return PowerLawFit(scale=float(counts[0]), exponent=0.0,
                           r_squared=None, n_points=int(counts.size))

    x_centered = log_rank - log_rank.mean()
    slope = float(np.dot(x_centered, log_count) / np.dot(x_centered, x_centered))
    intercept = float(log_count.mean() - slope * log_rank.mean())

    predicted = intercept + slope * log_rank
    ss_res = float(np.sum((log_count - predicted) ** 2))
    ss_tot = float(np.sum((log_count - log_count.mean()) ** 2))
    r_squared = None if ss_tot == 0.0 else 1.0 - ss_res / ss_tot

    return PowerLawFit(scale=float(np.exp(intercept)), exponent=-slope,
                       r_squared=r_squared, n_points=int(counts.size))
