"""Extremal generators, bases and Caratheodory decompositions of max cones.

A nonzero generator ``u`` is extremal iff for some ``j`` in its support the
rescaled vector ``u / u_j`` is minimal (componentwise) among all generators
``w / w_j`` with ``w_j > 0``. The basis of the cone is the set of extremal
generators, one per proportionality class, and can be found three ways:

``residuation``
    drop each column, left to right, if the principal solution over the
    remaining columns reproduces it;
``covering``
    the same pass, deciding redundancy by the set-covering certificate;
``minima``
    union of the minimal elements of every rescaled slice.

When several kept columns are proportional the highest index survives in
all three methods.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import _backend
from .maxcore import (
    Tolerance,
    as_matrix,
    as_vector,
    mat_vec_otimes,
    resolve_tol,
    support,
)
from .residuation import residuate

METHODS = ("residuation", "covering", "minima")


class NotAMemberError(ValueError):
    """The target vector is not in the cone spanned by the generators."""


@dataclass(frozen=True)
class BasisResult:
    kept: Tuple[int, ...]
    basis: np.ndarray


@dataclass(frozen=True)
class MinimaResult:
    minimal_indices: Tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """``target`` as the max of ``coef * U[:, col]`` over ``terms``."""

    terms: Tuple[Tuple[int, float], ...]
    target: np.ndarray


def _atol_vector(atol, m: int) -> np.ndarray:
    a = np.asarray(atol, dtype=np.float64)
    if a.ndim == 0:
        a = np.full(m, float(a))
    if a.shape != (m,):
        raise ValueError(f"atol must be a scalar or have length {m}")
    return np.ascontiguousarray(a)


def pareto_minima(points, atol=0.0, backend: Optional[str] = None) -> MinimaResult:
    """Indices of the componentwise-minimal points.

    A point is minimal when no other point is ``<=`` it without being equal
    to it. Of a group of equal minimal points only the lowest index is
    reported. ``atol`` is the comparison slack, scalar or one per point.

    >>> pareto_minima([(1, 1), (1, 0.5), (0.5, 1)]).minimal_indices
    (1, 2)
    """
    P = np.array(points, dtype=np.float64)
    if P.size == 0:
        return MinimaResult(())
    if P.ndim != 2:
        raise ValueError("points must all have the same dimension")
    P = np.ascontiguousarray(P)
    a = _atol_vector(atol, P.shape[0])
    mask = _backend.get(backend).minimal_mask(P, a)
    kept = []
    for i in np.flatnonzero(mask):
        if not any(np.all(np.abs(P[i] - P[m]) <= a[i]) for m in kept):
            kept.append(int(i))
    return MinimaResult(tuple(kept))


def scaled_slice(V, j: int):
    """Columns with ``j`` in their support and their rescalings ``u / u_j`` (as rows)."""
    V = as_matrix(V)
    idx = np.flatnonzero(V[j] > 0)
    P = np.ascontiguousarray((V[:, idx] / V[j, idx]).T)
    return idx, P


def slice_minima(V, j: int, tol: Optional[Tolerance] = None) -> Tuple[int, ...]:
    """Column indices whose rescaling at ``j`` is minimal in the ``j``-th slice."""
    V = as_matrix(V)
    tol = resolve_tol(tol, V)
    idx, P = scaled_slice(V, j)
    res = pareto_minima(P, tol.atol / V[j, idx])
    return tuple(int(idx[i]) for i in res.minimal_indices)


def _column(V, i: int) -> np.ndarray:
    if not 0 <= i < V.shape[1]:
        raise IndexError(f"column {i} out of range for {V.shape[1]} columns")
    u = V[:, i]
    if not np.any(u > 0):
        raise ValueError(f"column {i} is zero")
    return u


def is_extremal_column(V, i: int, tol: Optional[Tolerance] = None) -> bool:
    """Whether column ``i`` is extremal in the cone generated by the columns of ``V``.

    Another column proportional to column ``i`` does not disqualify it.
    Each competitor ``w`` is rescaled to agree with ``u`` at ``j`` and the
    comparison slack is ``tol.atol`` in the units of ``u``.
    """
    V = as_matrix(V)
    u = _column(V, i)
    tol = resolve_tol(tol, V)
    for j in support(u):
        minimal = True
        for m in range(V.shape[1]):
            w = V[:, m]
            if m == i or w[j] <= 0:
                continue
            w = w * (u[j] / w[j])
            if tol.leq(w, u) and not tol.equal(w, u):
                minimal = False
                break
        if minimal:
            return True
    return False


def extremal_columns(V, tol: Optional[Tolerance] = None) -> Tuple[int, ...]:
    V = as_matrix(V)
    tol = resolve_tol(tol, V)
    return tuple(
        i for i in range(V.shape[1]) if np.any(V[:, i] > 0) and is_extremal_column(V, i, tol)
    )


def is_redundant_column(V, i: int, tol: Optional[Tolerance] = None) -> bool:
    """Whether column ``i`` lies in the span of the other nonzero columns."""
    V = as_matrix(V)
    u = _column(V, i)
    tol = resolve_tol(tol, V)
    others = [m for m in range(V.shape[1]) if m != i and np.any(V[:, m] > 0)]
    return residuate(V[:, others], u, tol).exact


def _proportional(u: np.ndarray, w: np.ndarray, atol: float) -> bool:
    if not np.array_equal(u > 0, w > 0):
        return False
    j = int(np.argmax(u))
    return bool(np.all(np.abs(w * (u[j] / w[j]) - u) <= atol))


def _minima_keep(V: np.ndarray, atol: float, kern) -> np.ndarray:
    n, k = V.shape
    keep = np.zeros(k, dtype=bool)
    for j in range(n):
        idx, P = scaled_slice(V, j)
        if idx.size == 0:
            continue
        keep[idx[kern.minimal_mask(P, atol / V[j, idx])]] = True
    cand = np.flatnonzero(keep)
    for a, i in enumerate(cand):
        if any(_proportional(V[:, i], V[:, m], atol) for m in cand[a + 1:]):
            keep[i] = False
    return keep


def extract_basis(
    V,
    method: str = "residuation",
    tol: Optional[Tolerance] = None,
    backend: Optional[str] = None,
) -> BasisResult:
    """Essentially unique basis of the cone generated by the columns of ``V``.

    Zero columns are ignored; an empty or all-zero ``V`` gives an empty
    basis. ``kept`` lists 0-based column indices in increasing order.

    >>> A = [[1, 9, 10, 5, 9], [2, 10, 10, 0, 10], [3, 15, 14, 7, 0], [4, 20, 16, 8, 12]]
    >>> extract_basis(A).kept
    (0, 3, 4)
    """
    V = as_matrix(V)
    tol = resolve_tol(tol, V)
    kern = _backend.get(backend)
    if method == "residuation":
        keep = kern.scan_residuation(V, tol.atol)
    elif method == "covering":
        keep = kern.scan_covering(V, tol.atol)
    elif method == "minima":
        keep = _minima_keep(V, tol.atol, kern)
    else:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    kept = tuple(int(i) for i in np.flatnonzero(keep))
    return BasisResult(kept, as_matrix(V[:, list(kept)], n=V.shape[0]))


def caratheodory_decompose(U, v, tol: Optional[Tolerance] = None) -> Decomposition:
    """Write ``v`` as a max combination of at most ``|supp(v)|`` columns of ``U``.

    For each ``j`` in the support of ``v`` a column ``u`` with
    ``u / u_j <= v / v_j`` is chosen, preferring the lexicographically
    largest ``u / u_j`` and then the lowest index; its coefficient is
    ``v_j / u_j``. Raises :class:`NotAMemberError` when ``v`` is not in
    the span.
    """
    v = as_vector(v)
    U = as_matrix(U, n=v.size)
    tol = resolve_tol(tol, U, v)
    coef = {}
    for j in support(v):
        best = None
        for i in range(U.shape[1]):
            u = U[:, i]
            if u[j] <= 0:
                continue
            lam = v[j] / u[j]
            if not tol.leq(lam * u, v):
                continue
            key = tuple(u / u[j])
            if best is None or key > best[0]:
                best = (key, i, lam)
        if best is None:
            raise NotAMemberError(f"no generator bounds coordinate {j} from below")
        _, i, lam = best
        coef[i] = max(coef.get(i, 0.0), float(lam))
    terms = tuple(sorted(coef.items()))
    x = np.zeros(U.shape[1])
    for i, lam in terms:
        x[i] = lam
    if not tol.equal(mat_vec_otimes(U, x), v):
        raise NotAMemberError("selected terms do not reproduce the target")
    return Decomposition(terms, v)


def essentially_equal(B1, B2, tol: Optional[Tolerance] = None) -> bool:
    """Whether ``B2 = B1 P D`` for a permutation ``P`` and positive diagonal ``D``.

    Columns are compared after scaling to max norm 1, with slack ``tol.rtol``.
    """
    B1, B2 = as_matrix(B1), as_matrix(B2)
    if B1.shape != B2.shape:
        return False
    rtol = (tol or Tolerance()).rtol

    def normalized(B):
        m = B.max(axis=0) if B.shape[1] else np.zeros(0)
        return B / np.where(m > 0, m, 1.0)

    S1, S2 = normalized(B1), normalized(B2)
    free = list(range(S1.shape[1]))
    for c in range(S2.shape[1]):
        col = S2[:, c]
        hit = next(
            (a for a in free
             if np.array_equal(S1[:, a] > 0, col > 0) and np.all(np.abs(S1[:, a] - col) <= rtol)),
            None,
        )
        if hit is None:
            return False
        free.remove(hit)
    return True
