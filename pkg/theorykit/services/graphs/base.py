"""Base interface for transitive-closure algorithms."""

import logging
from abc import ABC, abstractmethod

import numpy as np

logger = logging.getLogger(__name__)


class ClosureMethod(ABC):
    """Abstract base class for reachability algorithms on adjacency matrices."""

    method_name: str = "base"

    @abstractmethod
    def reachability(self, adjacency: np.ndarray) -> np.ndarray:
        """
        Compute the transitive closure.

        Args:
            adjacency: Square 0/1 matrix

        Returns:
            0/1 int matrix with entry (i, j) = 1 iff a path of length >= 1
            leads from i to j
        """

    def __call__(self, adjacency: np.ndarray) -> np.ndarray:
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {adjacency.shape}")
        result = self.reachability(adjacency)
        logger.debug(f"{self.method_name} closure: {int(np.count_nonzero(adjacency))} -> "
                     f"{int(np.count_nonzero(result))} edge(s)")
        return result
