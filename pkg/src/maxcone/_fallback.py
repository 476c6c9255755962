"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``.

Both implementations must return identical masks on identical input;
``tests/test_backends.py`` checks this.
"""
import numpy as np


def _principal(B: np.ndarray, v: np.ndarray) -> np.ndarray:
    # x_i = min over supp(B[:, i]) of v_l / B[l, i]; B has no zero columns
    with np.errstate(divide="ignore", invalid="ignore"):
        R = np.where(B > 0, v[:, None] / B, np.inf)
    return R.min(axis=0)


def scan_residuation(V: np.ndarray, atol: float) -> np.ndarray:
    """Single left-to-right redundancy pass; returns the mask of kept columns.

    Column ``j`` is dropped when the principal solution over the columns
    still kept reproduces it within ``atol``. Zero columns are never kept.
    """
    k = V.shape[1]
    keep = V.max(axis=0) > 0 if k else np.zeros(0, dtype=bool)
    for j in range(k):
        if not keep[j]:
            continue
        others = np.flatnonzero(keep)
        others = others[others != j]
        v = V[:, j]
        if others.size == 0:
            continue
        B = V[:, others]
        x = _principal(B, v)
        image = (B * x).max(axis=1)
        if np.all(np.abs(image - v) <= atol):
            keep[j] = False
    return keep


def scan_covering(V: np.ndarray, atol: float) -> np.ndarray:
    """Same pass as :func:`scan_residuation`, deciding redundancy by set covering."""
    k = V.shape[1]
    keep = V.max(axis=0) > 0 if k else np.zeros(0, dtype=bool)
    for j in range(k):
        if not keep[j]:
            continue
        others = np.flatnonzero(keep)
        others = others[others != j]
        if others.size == 0:
            continue
        v = V[:, j]
        B = V[:, others]
        x = _principal(B, v)
        tight = (B > 0) & (np.abs(v[:, None] - B * x) <= atol) & (x > 0)
        if np.all(tight.any(axis=1)[v > 0]):
            keep[j] = False
    return keep


def minimal_mask(P: np.ndarray, atol: np.ndarray) -> np.ndarray:
    """Rows of ``P`` not strictly dominated from below by another row.

    Row ``i`` is compared with slack ``atol[i]``: row ``p`` beats it when
    ``P[p] <= P[i] + atol[i]`` and the two rows are not equal within the
    same slack. Equal rows are all kept.
    """
    m = P.shape[0]
    out = np.ones(m, dtype=bool)
    for i in range(m):
        D = P - P[i]
        a = atol[i]
        le = np.all(D <= a, axis=1)
        eq = np.all(np.abs(D) <= a, axis=1)
        le[i] = False
        if np.any(le & ~eq):
            out[i] = False
    return out
