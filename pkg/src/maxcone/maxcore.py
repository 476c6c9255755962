"""Max-times semiring arithmetic on nonnegative vectors and matrices.

Vectors are 1-D float64 arrays, generator matrices are 2-D float64 arrays
stored column-major so that each generator (column) is contiguous. All
validated arrays are returned read-only; every function here is pure.

Indices are 0-based throughout the library. Conversion to the 1-based
convention happens in :mod:`maxcone.io` and :mod:`maxcone.cli` only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

DEFAULT_RTOL = 1e-9

Support = Tuple[int, ...]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


@dataclass(frozen=True)
class Tolerance:
    """Absolute equality threshold ``anchor * rtol``.

    ``anchor`` is normally the largest entry of the matrix under study; when
    it is left as ``None`` each operation fills it in from its own operands
    (see :meth:`resolve`).
    """

    rtol: float = DEFAULT_RTOL
    anchor: Optional[float] = None

    def __post_init__(self):
        if not (self.rtol >= 0 and np.isfinite(self.rtol)):
            raise ValueError(f"rtol must be finite and >= 0, got {self.rtol!r}")
        if self.anchor is not None and not (self.anchor >= 0 and np.isfinite(self.anchor)):
            raise ValueError(f"anchor must be finite and >= 0, got {self.anchor!r}")

    @property
    def atol(self) -> float:
        return self.rtol * (1.0 if self.anchor is None else self.anchor)

    def resolve(self, *arrays) -> "Tolerance":
        """Return a copy anchored at the max entry of ``arrays`` unless already anchored."""
        if self.anchor is not None:
            return self
        anchor = 0.0
        for a in arrays:
            a = np.asarray(a)
            if a.size:
                anchor = max(anchor, float(a.max()))
        return Tolerance(self.rtol, anchor)

    def equal(self, a, b) -> bool:
        return bool(np.all(np.abs(np.asarray(a, float) - np.asarray(b, float)) <= self.atol))

    def leq(self, a, b) -> bool:
        return bool(np.all(np.asarray(a, float) <= np.asarray(b, float) + self.atol))


def resolve_tol(tol: Optional[Tolerance], *arrays) -> Tolerance:
    return (tol or Tolerance()).resolve(*arrays)


def _check_entries(a: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} has NaN or infinite entries")
    if np.any(a < 0):
        raise ValueError(f"{what} has negative entries")


def as_vector(v) -> np.ndarray:
    """Validate ``v`` as a nonnegative finite vector of length >= 1."""
    a = np.array(v, dtype=np.float64)
    if a.ndim != 1 or a.size == 0:
        raise DimensionError(f"expected a nonempty 1-D vector, got shape {a.shape}")
    _check_entries(a, "vector")
    a.flags.writeable = False
    return a


def as_matrix(V, n: Optional[int] = None) -> np.ndarray:
    """Validate ``V`` as an n x k generator matrix (k may be 0).

    A 1-D input is read as a single column. ``n`` fixes the row count,
    which is needed to give shape to an empty generator list.
    """
    a = np.array(V, dtype=np.float64)
    if a.ndim == 1:
        a = a.reshape(-1, 1) if a.size else np.zeros((n or 0, 0))
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    if a.size == 0 and n is not None and a.shape[0] != n:
        a = np.zeros((n, 0))
    if n is not None and a.shape[0] != n:
        raise DimensionError(f"expected {n} rows, got {a.shape[0]}")
    if a.shape[0] == 0:
        raise DimensionError("a generator matrix needs at least one row")
    _check_entries(a, "matrix")
    a = np.asfortranarray(a)
    a.flags.writeable = False
    return a


def oplus(a: float, b: float) -> float:
    """Semiring addition, ``max(a, b)``."""
    return max(a, b)


def otimes(a: float, b: float) -> float:
    return a * b


def vec_oplus(u, v) -> np.ndarray:
    u, v = as_vector(u), as_vector(v)
    if u.shape != v.shape:
        raise DimensionError(f"length mismatch: {u.size} vs {v.size}")
    return np.maximum(u, v)


def mat_oplus(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch: {A.shape} vs {B.shape}")
    return np.maximum(A, B)


def mat_vec_otimes(U, x) -> np.ndarray:
    """``(U (x) x)_j = max_i U[j, i] * x[i]``; the zero vector when k = 0."""
    U = as_matrix(U)
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.size != U.shape[1]:
        raise DimensionError(f"matrix has {U.shape[1]} columns, vector has shape {x.shape}")
    _check_entries(x, "coefficient vector")
    if U.shape[1] == 0:
        return np.zeros(U.shape[0])
    return (U * x).max(axis=1)


def mat_mat_otimes(A, B) -> np.ndarray:
    """``C[i, j] = max_l A[i, l] * B[l, j]``."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise DimensionError(f"inner dimensions differ: {A.shape} (x) {B.shape}")
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]))
    return (A[:, :, None] * B[None, :, :]).max(axis=1)


def max_norm(v) -> float:
    v = np.asarray(v, dtype=np.float64)
    return float(v.max()) if v.size else 0.0


def scale_max(v) -> np.ndarray:
    """Divide ``v`` by its max norm; raises on the zero vector."""
    v = as_vector(v)
    m = max_norm(v)
    if m == 0:
        raise ValueError("cannot scale the zero vector")
    return v / m


def scale_at(v, j: int) -> np.ndarray:
    """``v / v[j]``, the scaling that puts 1 in coordinate ``j``."""
    v = as_vector(v)
    if not 0 <= j < v.size:
        raise IndexError(f"coordinate {j} out of range for length {v.size}")
    if v[j] <= 0:
        raise ValueError(f"coordinate {j} is not in the support")
    return v / v[j]


def support(v) -> Support:
    """Indices of strictly positive coordinates (exact test, no tolerance)."""
    v = np.asarray(v, dtype=np.float64)
    return tuple(int(j) for j in np.flatnonzero(v > 0))


def leq(v, w) -> bool:
    """Exact componentwise order ``v <= w``."""
    v = np.asarray(v, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if v.shape != w.shape:
        raise DimensionError(f"length mismatch: {v.shape} vs {w.shape}")
    return bool(np.all(v <= w))


def identity(n: int) -> np.ndarray:
    """The standard basis of R+^n as columns."""
    return as_matrix(np.eye(n))


def nonzero_columns(V) -> np.ndarray:
    """0-based indices of columns with at least one positive entry."""
    V = as_matrix(V)
    return np.flatnonzero(V.max(axis=0) > 0) if V.shape[1] else np.zeros(0, dtype=np.intp)


def column_subset(V, idx: Sequence[int]) -> np.ndarray:
    V = as_matrix(V)
    return as_matrix(V[:, list(idx)], n=V.shape[0])
