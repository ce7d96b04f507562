"""Append-only archive of evaluated (configuration, cost) pairs."""

from __future__ import annotations

import numpy as np

from .space import SearchSpace


class Archive:
    """Ordered evaluations of a black-box objective, in external coordinates."""

    def __init__(self, space: SearchSpace):
        self.space = space
        self._configs: list[np.ndarray] = []
        self._costs: list[float] = []

    def append(self, config, cost: float) -> None:
        config = np.asarray(config, dtype=float)
        if config.shape != (self.space.dims,):
            raise ValueError(f"configuration must have shape ({self.space.dims},)")
        self._configs.append(config)
        self._costs.append(float(cost))

    def __len__(self) -> int:
        return len(self._costs)

    def configs(self) -> np.ndarray:
        """(T, d) matrix of external-coordinate configurations."""
        if not self._configs:
            return np.empty((0, self.space.dims))
        return np.vstack(self._configs)

    def costs(self) -> np.ndarray:
        return np.asarray(self._costs, dtype=float)

    @property
    def incumbent(self) -> int:
        """Index of the minimal-cost entry."""
        if not self._costs:
            raise ValueError("archive is empty")
        return int(np.argmin(self._costs))

    @property
    def incumbent_cost(self) -> float:
        return self._costs[self.incumbent]

    @property
    def incumbent_config(self) -> np.ndarray:
        return self._configs[self.incumbent]

    def to_dict(self) -> dict:
        return {"configs": self.configs().tolist(), "costs": self.costs().tolist()}

    @classmethod
    def from_arrays(cls, space: SearchSpace, configs, costs) -> "Archive":
        archive = cls(space)
        for x, y in zip(np.atleast_2d(configs), costs):
            archive.append(x, y)
        return archive
