"""Principal solutions of ``U (x) z <= v`` and membership in a max cone.

The principal solution is ``x_i = min{v_j / U[j, i] : U[j, i] > 0}`` with
``x_i = 0`` for zero columns. It is the greatest ``z`` with ``U (x) z <= v``
(on matrices without zero columns), and ``v`` lies in the cone spanned by
the columns of ``U`` exactly when ``U (x) x = v``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .maxcore import (
    DimensionError,
    Support,
    Tolerance,
    as_matrix,
    as_vector,
    mat_vec_otimes,
    resolve_tol,
    support,
)


@dataclass(frozen=True)
class ResiduationResult:
    x: np.ndarray
    image: np.ndarray
    exact: bool


@dataclass(frozen=True)
class CoveringCertificate:
    """Tight coordinate sets ``sets[i]`` of each column against the target.

    ``covered`` holds iff the union of the sets equals ``target_support``.
    """

    sets: Tuple[Support, ...]
    target_support: Support
    covered: bool


def _operands(U, v):
    v = as_vector(v)
    U = as_matrix(U, n=v.size)
    return U, v


def principal_solution(U, v) -> np.ndarray:
    U, v = _operands(U, v)
    if U.shape[1] == 0:
        return np.zeros(0)
    with np.errstate(divide="ignore", invalid="ignore"):
        R = np.where(U > 0, v[:, None] / U, np.inf)
    x = R.min(axis=0)
    x[np.isinf(x)] = 0.0
    return x


def residuate(U, v, tol: Optional[Tolerance] = None) -> ResiduationResult:
    """Principal solution of ``U (x) z <= v`` with its image and exactness verdict.

    Examples
    --------
    >>> U = [[1, 5, 9], [2, 0, 10], [3, 7, 0], [4, 8, 12]]
    >>> r = residuate(U, [10, 10, 14, 16])
    >>> r.x.tolist(), r.exact
    ([4.0, 2.0, 1.0], True)
    """
    U, v = _operands(U, v)
    tol = resolve_tol(tol, U, v)
    x = principal_solution(U, v)
    image = mat_vec_otimes(U, x)
    return ResiduationResult(x=x, image=image, exact=tol.equal(image, v))


def solve_exact(U, v, tol: Optional[Tolerance] = None) -> Optional[np.ndarray]:
    """The principal solution if it reproduces ``v``, else ``None``."""
    r = residuate(U, v, tol)
    return r.x if r.exact else None


def covering_sets(U, v, tol: Optional[Tolerance] = None) -> CoveringCertificate:
    """Set-covering certificate for ``v in span(columns of U)``.

    ``sets[i]`` holds the coordinates ``j`` in the support of column ``i``
    where ``v_j / U[j, i]`` attains the principal ``x_i``, compared as
    ``|v_j - x_i U[j, i]| <= atol``; it is empty when ``x_i = 0``.
    """
    U, v = _operands(U, v)
    tol = resolve_tol(tol, U, v)
    x = principal_solution(U, v)
    tight = (U > 0) & (np.abs(v[:, None] - U * x) <= tol.atol) & (x > 0)
    sets = tuple(tuple(int(j) for j in np.flatnonzero(tight[:, i])) for i in range(U.shape[1]))
    target = support(v)
    union = set().union(*sets) if sets else set()
    return CoveringCertificate(sets, target, union == set(target))


BRUTE_FORCE_MAX_COLS = 4
BRUTE_FORCE_MAX_ROWS = 5


def brute_force_member(U, v) -> bool:
    """Exhaustive membership test in exact rational arithmetic.

    Any exact solution can be raised coordinatewise to the principal one,
    and the principal coefficients are among ``{0} | {v_j / U[j, i]}``, so
    trying every combination of these candidates is complete. Only for
    ``k <= 4`` and ``n <= 5``.
    """
    U, v = _operands(U, v)
    n, k = U.shape
    if k > BRUTE_FORCE_MAX_COLS or n > BRUTE_FORCE_MAX_ROWS:
        raise ValueError(
            f"instance {n}x{k} too large for brute force "
            f"(limit {BRUTE_FORCE_MAX_ROWS}x{BRUTE_FORCE_MAX_COLS})"
        )
    Uq = [[Fraction(float(U[j, i])) for j in range(n)] for i in range(k)]
    vq = [Fraction(float(t)) for t in v]
    candidates = []
    for col in Uq:
        c = {Fraction(0)}
        c.update(vq[j] / col[j] for j in range(n) if col[j] != 0)
        # a term that overshoots v anywhere can never be part of an exact solution
        candidates.append(sorted(lam for lam in c if all(lam * u <= t for u, t in zip(col, vq))))
    for lam in itertools.product(*candidates):
        ok = True
        for j in range(n):
            best = Fraction(0)
            for i in range(k):
                t = lam[i] * Uq[i][j]
                if t > best:
                    best = t
            if best != vq[j]:
                ok = False
                break
        if ok:
            return True
    return False


def spanit_condition(U, v, tol: Optional[Tolerance] = None) -> bool:
    """Membership via scaled comparison, without building any certificate.

    ``v`` is in the span iff every ``j`` in its support has a column ``u``
    with ``u_j > 0`` and ``u / u_j <= v / v_j``. The comparison is done as
    ``u * (v_j / u_j) <= v + atol`` so the slack is in the units of ``v``.
    """
    U, v = _operands(U, v)
    tol = resolve_tol(tol, U, v)
    for j in support(v):
        found = False
        for i in range(U.shape[1]):
            u = U[:, i]
            if u[j] > 0 and np.all(u * (v[j] / u[j]) <= v + tol.atol):
                found = True
                break
        if not found:
            return False
    return True


__all__ = [
    "CoveringCertificate",
    "DimensionError",
    "ResiduationResult",
    "brute_force_member",
    "covering_sets",
    "principal_solution",
    "residuate",
    "solve_exact",
    "spanit_condition",
]
