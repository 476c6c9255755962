"""Timing harness for basis extraction.

Every cell ``(n, k)`` gets its own matrix drawn from a generator seeded by
``(seed, n, k)``, so a cell's input does not depend on which other cells
are run. Entries are uniform on (0, 1]; ``sparsity`` zeroes that fraction
of them. For an O(n k^2) algorithm, doubling ``k`` should multiply the time
by about 4 and doubling ``n`` by about 2.
"""
from __future__ import annotations

import math
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from . import _backend
from .extremals import extract_basis
from .maxcore import Tolerance, as_matrix


@dataclass
class BenchCell:
    n: int
    k: int
    method: str
    backend: str
    median_s: float
    reps: int
    times_s: List[float]
    basis_size: int


@dataclass
class GrowthRatio:
    axis: str  # "k" or "n"
    fixed: int
    size_from: int
    size_to: int
    time_from: float
    time_to: float
    per_doubling: float


@dataclass
class BenchReport:
    cells: List[BenchCell] = field(default_factory=list)
    ratios: List[GrowthRatio] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def generate_matrix(n: int, k: int, seed: int = 0, sparsity: float = 0.0) -> np.ndarray:
    if n < 1 or k < 0:
        raise ValueError(f"invalid size n={n} k={k}")
    if not 0.0 <= sparsity < 1.0:
        raise ValueError(f"sparsity must be in [0, 1), got {sparsity}")
    rng = np.random.default_rng([seed, n, k])
    M = 1.0 - rng.random((n, k))
    if sparsity:
        M[rng.random((n, k)) < sparsity] = 0.0
    return as_matrix(M)


def time_basis(V, method: str, reps: int, backend: Optional[str] = None,
               rtol: float = Tolerance().rtol) -> BenchCell:
    tol = Tolerance(rtol).resolve(V)
    times = []
    res = None
    for _ in range(reps):
        t0 = time.perf_counter()
        res = extract_basis(V, method=method, tol=tol, backend=backend)
        times.append(max(time.perf_counter() - t0, 1e-9))
    name = _backend.NAME if backend in (None, "auto") else backend
    return BenchCell(V.shape[0], V.shape[1], method, name,
                     statistics.median(times), reps, times, len(res.kept))


def _per_doubling(t0: float, t1: float, s0: int, s1: int) -> float:
    return (t1 / t0) ** (1.0 / math.log2(s1 / s0))


def growth_ratios(cells: Sequence[BenchCell]) -> List[GrowthRatio]:
    by = {(c.n, c.k): c.median_s for c in cells}
    ns = sorted({c.n for c in cells})
    ks = sorted({c.k for c in cells})
    out = []
    for n in ns:
        row = [k for k in ks if (n, k) in by]
        for a, b in zip(row, row[1:]):
            out.append(GrowthRatio("k", n, a, b, by[n, a], by[n, b],
                                   _per_doubling(by[n, a], by[n, b], a, b)))
    for k in ks:
        col = [n for n in ns if (n, k) in by]
        for a, b in zip(col, col[1:]):
            out.append(GrowthRatio("n", k, a, b, by[a, k], by[b, k],
                                   _per_doubling(by[a, k], by[b, k], a, b)))
    return out


def run_bench(ns: Sequence[int], ks: Sequence[int], reps: int = 3, seed: int = 0,
              method: str = "residuation", sparsity: float = 0.0,
              backend: Optional[str] = None, rtol: float = Tolerance().rtol) -> BenchReport:
    if reps < 1:
        raise ValueError("reps must be >= 1")
    if not ns or not ks or min(ns) < 1 or min(ks) < 1:
        raise ValueError("sizes must be positive")
    cells = []
    for n in ns:
        for k in ks:
            V = generate_matrix(n, k, seed, sparsity)
            cells.append(time_basis(V, method, reps, backend, rtol))
    return BenchReport(cells, growth_ratios(cells))
