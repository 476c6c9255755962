"""Reading and writing generator matrices as CSV or JSON.

CSV: one line per coordinate, one comma-separated field per generator.
Lines starting with ``#`` are comments; a ``# rows=N cols=K`` comment
declares the shape, which is how an ``N x 0`` matrix is written.

JSON: ``{"rows": N, "cols": K, "data": [...]}`` with ``data`` row-major.
Other keys are ignored.

Numbers are written in the shortest form that parses back to the same
double, so ``read(write(M)) == M`` bit for bit.
"""
from __future__ import annotations

import json
import math
import re
from pathlib import Path
from typing import Optional

import numpy as np

from .maxcore import as_matrix

FORMATS = ("csv", "json")
_SHAPE = re.compile(r"#\s*rows\s*=\s*(\d+)\s+cols\s*=\s*(\d+)\s*$")


class MatrixFormatError(ValueError):
    pass


def infer_format(path, fmt: Optional[str] = None) -> str:
    if fmt:
        if fmt not in FORMATS:
            raise MatrixFormatError(f"unknown format {fmt!r}")
        return fmt
    return "json" if str(path).lower().endswith(".json") else "csv"


def format_number(x: float) -> str:
    x = float(x)
    if x.is_integer() and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


def human(x: float) -> str:
    """Twelve significant digits, for messages and tables."""
    return format(float(x), ".12g")


def _number(tok: str) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise MatrixFormatError(f"not a number: {tok.strip()!r}") from None
    if not math.isfinite(x):
        raise MatrixFormatError(f"non-finite entry: {tok.strip()!r}")
    if x < 0:
        raise MatrixFormatError(f"negative entry: {tok.strip()!r}")
    return x


def _validated(a) -> np.ndarray:
    try:
        return as_matrix(a)
    except ValueError as e:
        raise MatrixFormatError(str(e)) from None


def parse_csv(text: str) -> np.ndarray:
    shape = None
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            m = _SHAPE.match(s)
            if m:
                shape = (int(m.group(1)), int(m.group(2)))
            continue
        rows.append([_number(t) for t in s.split(",")])
    if not rows:
        if shape is None or shape[1] != 0 or shape[0] == 0:
            raise MatrixFormatError("no data rows")
        return _validated(np.zeros(shape))
    k = len(rows[0])
    if any(len(r) != k for r in rows):
        raise MatrixFormatError("rows have differing numbers of fields")
    if shape is not None and shape != (len(rows), k):
        raise MatrixFormatError(f"header declares {shape}, data is {(len(rows), k)}")
    return _validated(rows)


def parse_json(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or not {"rows", "cols", "data"} <= obj.keys():
        raise MatrixFormatError('expected an object with "rows", "cols" and "data"')
    n, k, data = obj["rows"], obj["cols"], obj["data"]
    if not (isinstance(n, int) and isinstance(k, int) and n >= 1 and k >= 0):
        raise MatrixFormatError(f"bad dimensions rows={n!r} cols={k!r}")
    if not isinstance(data, list) or len(data) != n * k:
        raise MatrixFormatError(f"data must be a list of {n * k} numbers")
    vals = []
    for t in data:
        if isinstance(t, bool) or not isinstance(t, (int, float)):
            raise MatrixFormatError(f"not a number: {t!r}")
        vals.append(_number(repr(t)))
    return _validated(np.array(vals, dtype=np.float64).reshape(n, k))


def dump_csv(M) -> str:
    M = as_matrix(M)
    n, k = M.shape
    lines = [f"# rows={n} cols={k}"]
    if k:
        lines += [",".join(format_number(x) for x in row) for row in M]
    return "\n".join(lines) + "\n"


def matrix_object(M) -> dict:
    M = as_matrix(M)
    n, k = M.shape
    data = [int(x) if float(x).is_integer() and abs(x) < 2**53 else float(x) for x in M.ravel()]
    return {"rows": n, "cols": k, "data": data}


def dump_json(M) -> str:
    return json.dumps(matrix_object(M)) + "\n"


def parse(text: str, fmt: str) -> np.ndarray:
    return parse_json(text) if infer_format("", fmt) == "json" else parse_csv(text)


def dump(M, fmt: str) -> str:
    return dump_json(M) if infer_format("", fmt) == "json" else dump_csv(M)


def read_matrix(path, fmt: Optional[str] = None) -> np.ndarray:
    fmt = infer_format(path, fmt)
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MatrixFormatError(f"cannot read {path}: {e.strerror}") from None
    return parse(text, fmt)


def write_matrix(M, path, fmt: Optional[str] = None) -> None:
    Path(path).write_text(dump(M, infer_format(path, fmt)))


def parse_vector(arg: str, fmt: Optional[str] = None) -> np.ndarray:
    """A vector given inline as ``"1,2,3"`` or as a one-row/one-column matrix file."""
    if Path(arg).is_file():
        M = read_matrix(arg, fmt)
        if M.shape[1] == 1:
            return M[:, 0].copy()
        if M.shape[0] == 1:
            return M[0].copy()
        raise MatrixFormatError(f"{arg}: expected a single row or column, got {M.shape}")
    toks = [t for t in re.split(r"[,\s]+", arg.strip()) if t]
    if not toks:
        raise MatrixFormatError("empty vector")
    return np.array([_number(t) for t in toks])
