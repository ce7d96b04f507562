"""Continuous box search spaces with optional per-dimension log scaling.

All modelling and candidate generation happens in internal coordinates on
the unit cube. External (user) coordinates appear only at objective
evaluation and reporting boundaries. A log-scaled dimension is mapped
through log before the affine rescaling, so equidistance internally means
equidistance in log space externally.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SearchSpace:
    """Box domain with per-dimension bounds and log-scale flags."""

    lower: np.ndarray
    upper: np.ndarray
    log_scale: np.ndarray = field(default=None)

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValueError("lower and upper must be 1-d arrays of equal length")
        log_scale = self.log_scale
        if log_scale is None:
            log_scale = np.zeros(lower.shape, dtype=bool)
        log_scale = np.asarray(log_scale, dtype=bool)
        if log_scale.shape != lower.shape:
            raise ValueError("log_scale length must match bounds")
        if not np.all(lower < upper):
            raise ValueError("need lower < upper in every dimension")
        if np.any(log_scale & (lower <= 0)):
            raise ValueError("log-scaled dimensions require positive lower bounds")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "log_scale", log_scale)

    @property
    def dims(self) -> int:
        return self.lower.size

    def _edges(self):
        lo = np.where(self.log_scale, np.log(self.lower), self.lower)
        hi = np.where(self.log_scale, np.log(self.upper), self.upper)
        return lo, hi

    def to_internal(self, x) -> np.ndarray:
        """Map external coordinates (..., d) onto the unit cube."""
        x = np.asarray(x, dtype=float)
        lo, hi = self._edges()
        t = np.where(self.log_scale, np.log(np.maximum(x, np.finfo(float).tiny)), x)
        return (t - lo) / (hi - lo)

    def to_external(self, u) -> np.ndarray:
        """Map unit-cube coordinates (..., d) back to external values."""
        u = np.asarray(u, dtype=float)
        lo, hi = self._edges()
        t = lo + u * (hi - lo)
        return np.where(self.log_scale, np.exp(t), t)

    def to_external_dims(self, u, dims) -> np.ndarray:
        """Map unit-cube values of a dimension subset to external values.

        ``u`` has shape (..., len(dims)); column j belongs to dimension
        dims[j] of the space.
        """
        u = np.asarray(u, dtype=float)
        dims = list(dims)
        lo, hi = self._edges()
        t = lo[dims] + u * (hi[dims] - lo[dims])
        return np.where(self.log_scale[dims], np.exp(t), t)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """n uniform points in internal coordinates, shape (n, d)."""
        return rng.random((n, self.dims))

    def contains(self, x, atol: float = 0.0) -> bool:
        """Whether an external point lies inside the box."""
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower - atol) and np.all(x <= self.upper + atol))

    def to_dict(self) -> dict:
        return {
            "lower": self.lower.tolist(),
            "upper": self.upper.tolist(),
            "log_scale": self.log_scale.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchSpace":
        return cls(
            np.asarray(d["lower"], dtype=float),
            np.asarray(d["upper"], dtype=float),
            np.asarray(d.get("log_scale", [False] * len(d["lower"])), dtype=bool),
        )

    @classmethod
    def unit(cls, dims: int) -> "SearchSpace":
        return cls(np.zeros(dims), np.ones(dims))
