"""Pairwise paper similarity entity."""

from dataclasses import dataclass

import numpy as np

from src.domain.exceptions import DimensionMismatchError

SYMMETRY_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """
    Symmetric, non-negative n x n similarities with a zero diagonal.

    Pairs are unordered: the objective counts each pair once and never a
    paper with itself.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        """Validate shape, symmetry and sign, then freeze the array."""
        values = np.array(self.values, dtype=float, copy=True)

        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise DimensionMismatchError(f"Similarity matrix must be square, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("Similarity matrix contains non-finite values")
        if np.any(values < 0):
            raise ValueError("Similarity matrix must be non-negative")
        if not np.allclose(values, values.T, atol=SYMMETRY_TOLERANCE, rtol=0.0):
            raise ValueError("Similarity matrix must be symmetric")
        if np.any(np.diag(values) != 0):
            raise ValueError("Similarity matrix diagonal must be zero")

        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_array(cls, values: np.ndarray) -> "SimilarityMatrix":
        """Build from any square array, symmetrizing and zeroing the diagonal."""
        array = np.asarray(values, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionMismatchError(f"Similarity matrix must be square, got shape {array.shape}")
        array = (array + array.T) / 2.0
        np.fill_diagonal(array, 0.0)
        return cls(array)

    @classmethod
    def zeros(cls, n: int) -> "SimilarityMatrix":
        return cls(np.zeros((n, n)))

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def scaled(self, factor: float) -> "SimilarityMatrix":
        """Multiply every similarity by a positive constant."""
        if factor <= 0:
            raise ValueError("Scale factor must be positive")
        return SimilarityMatrix(self.values * factor)

    def require_size(self, n: int) -> None:
        """Raise unless the matrix is n x n."""
        if self.n != n:
            raise DimensionMismatchError(f"Similarity matrix is {self.n}x{self.n}, expected {n}x{n}")

    def __getitem__(self, key: tuple[int, int]) -> float:
        return float(self.values[key])
