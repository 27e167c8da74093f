"""Correlation, principal components, varimax rotation, and binning.

The numeric path here is deliberately BLAS-free: correlations are
explicit sums over column pairs and the eigensolver is a cyclic Jacobi
sweep. A dgemm-based path can reorder float additions depending on the
thread count, and the pipeline promises bitwise-identical output for
identical input, so every reduction happens in a fixed order.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    ArityError,
    EigenConvergenceError,
    TableError,
    ZeroVarianceError,
)
from .table import Axis, JointTable

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
VARIMAX_TOL = 1e-12
VARIMAX_MAX_SWEEPS = 100


@dataclass(frozen=True)
class DataMatrix:
    """Cases-by-variables real matrix with labels on both dimensions.

    `kind` is optional provenance metadata (e.g. the feature family a
    block of columns came from); juxtaposition uses it to prefix labels.
    """

    case_labels: tuple[str, ...]
    variable_labels: tuple[str, ...]
    values: np.ndarray
    kind: str | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "case_labels", tuple(self.case_labels))
        object.__setattr__(self, "variable_labels", tuple(self.variable_labels))
        object.__setattr__(self, "values", values)
        if values.ndim != 2:
            raise TableError("data matrix must be two-dimensional")
        if values.shape != (len(self.case_labels), len(self.variable_labels)):
            raise TableError(
                f"matrix shape {values.shape} does not match "
                f"{len(self.case_labels)} cases x {len(self.variable_labels)} variables"
            )
        if len(set(self.variable_labels)) != len(self.variable_labels):
            raise TableError("duplicate variable labels")

    @property
    def n_cases(self) -> int:
        return self.values.shape[0]

    @property
    def n_variables(self) -> int:
        return self.values.shape[1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case"] + list(self.variable_labels))
        for label, row in zip(self.case_labels, self.values):
            writer.writerow([label] + [repr(float(v)) for v in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, kind: str | None = None) -> "DataMatrix":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or len(rows[0]) < 2:
            raise TableError("data-matrix CSV needs a case column and at least one variable")
        variables = tuple(rows[0][1:])
        body = [r for r in rows[1:] if r]
        cases = tuple(r[0] for r in body)
        values = np.array([[float(v) for v in r[1:]] for r in body])
        return cls(cases, variables, values, kind=kind)


@dataclass(frozen=True)
class LoadingsMatrix:
    """Variables-by-factors loadings plus pre-rotation eigenvalues."""

    variable_labels: tuple[str, ...]
    loadings: np.ndarray
    eigenvalues: tuple[float, ...]

    def __post_init__(self):
        loadings = np.asarray(self.loadings, dtype=np.float64)
        object.__setattr__(self, "variable_labels", tuple(self.variable_labels))
        object.__setattr__(self, "loadings", loadings)
        object.__setattr__(self, "eigenvalues", tuple(float(e) for e in self.eigenvalues))
        if loadings.ndim != 2 or loadings.shape[0] != len(self.variable_labels):
            raise TableError("loadings shape does not match variable labels")
        if loadings.shape[1] != len(self.eigenvalues):
            raise TableError("one eigenvalue per factor is required")
        if np.any(np.abs(loadings) > 1.0 + 1e-9):
            raise TableError("loading magnitude exceeds 1 beyond tolerance")
        communality = np.sum(loadings**2, axis=1)
        if np.any(communality > 1.0 + 1e-6):
            raise TableError("per-variable communality exceeds 1 beyond tolerance")

    @property
    def k(self) -> int:
        return self.loadings.shape[1]

    def to_csv(self) -> str:
        """Variables as rows, factors as columns, eigenvalue footer row."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        k = self.k
        writer.writerow(["variable"] + [f"factor{j + 1}" for j in range(k)])
        for label, row in zip(self.variable_labels, self.loadings):
            writer.writerow([label] + [repr(float(v)) for v in row])
        writer.writerow(["eigenvalue"] + [repr(float(e)) for e in self.eigenvalues])
        return buf.getvalue()


def correlation_matrix(data: DataMatrix) -> np.ndarray:
    """Pearson correlations between all variable pairs.

    Constant columns have no defined correlation; the error names the
    first offender so callers can filter and retry.
    """
    if data.n_cases < 2:
        raise TableError(f"need at least 2 cases, got {data.n_cases}")
    m = data.n_cases
    centered = data.values - data.values.sum(axis=0) / m
    # np.sum over one column at a time keeps the reduction order fixed;
    # a matmul here would make results depend on the BLAS thread count
    ss = np.array([float(np.sum(centered[:, j] ** 2)) for j in range(data.n_variables)])
    for j, s in enumerate(ss):
        if s == 0.0:
            raise ZeroVarianceError(data.variable_labels[j])
    norms = np.sqrt(ss)
    n = data.n_variables
    corr = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            r = float(np.sum(centered[:, i] * centered[:, j])) / (norms[i] * norms[j])
            r = min(1.0, max(-1.0, r))
            corr[i, j] = corr[j, i] = r
    return corr


def jacobi_eigh(matrix: np.ndarray, tol: float = JACOBI_TOL,
                max_sweeps: int = JACOBI_MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors-as-columns), unsorted. Converges
    when the off-diagonal Frobenius norm drops below `tol`.
    """
    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise TableError("matrix must be square")
    v = np.eye(n)
    if n == 1:
        return np.array([a[0, 0]]), v
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[p, q] ** 2 for p in range(n) for q in range(n) if p != q))
        if off < tol:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = 0.5 * math.atan2(2.0 * a[p, q], a[q, q] - a[p, p])
                c, s = math.cos(theta), math.sin(theta)
                rows_p = a[p, :].copy()
                rows_q = a[q, :].copy()
                a[p, :] = c * rows_p - s * rows_q
                a[q, :] = s * rows_p + c * rows_q
                cols_p = a[:, p].copy()
                cols_q = a[:, q].copy()
                a[:, p] = c * cols_p - s * cols_q
                a[:, q] = s * cols_p + c * cols_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    off = math.sqrt(sum(a[p, q] ** 2 for p in range(n) for q in range(n) if p != q))
    if off < tol:
        return np.diag(a).copy(), v
    raise EigenConvergenceError(
        f"Jacobi sweep limit {max_sweeps} reached, off-diagonal norm {off:.3e}"
    )


def _fix_column_signs(matrix: np.ndarray) -> np.ndarray:
    out = matrix.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        pivot = int(np.argmax(np.abs(col)))
        if col[pivot] < 0:
            out[:, j] = -col
    return out


def extract_factors(corr: np.ndarray, k: int,
                    variable_labels: Sequence[str] | None = None) -> LoadingsMatrix:
    """Top-k principal components of a correlation matrix as loadings.

    Loadings column j is eigenvector_j scaled by sqrt(eigenvalue_j),
    eigenvalues descending, column signs fixed so the largest-magnitude
    entry of each column is positive.
    """
    corr = np.asarray(corr, dtype=np.float64)
    n = corr.shape[0]
    if not 1 <= k <= n:
        raise ArityError(f"factor count must be in 1..{n}, got {k}")
    eigenvalues, eigenvectors = jacobi_eigh(corr)
    # stable sort keeps tied eigenvalues in Jacobi output order
    order = np.argsort(-eigenvalues, kind="stable")[:k]
    top_values = eigenvalues[order]
    top_vectors = _fix_column_signs(eigenvectors[:, order])
    scale = np.sqrt(np.maximum(top_values, 0.0))
    loadings = top_vectors * scale
    loadings = np.clip(loadings, -1.0, 1.0)
    if variable_labels is None:
        variable_labels = tuple(f"v{i + 1}" for i in range(n))
    return LoadingsMatrix(tuple(variable_labels), loadings, tuple(top_values))


def varimax_criterion(loadings: np.ndarray) -> float:
    """Raw varimax objective: summed per-factor variance of squared loadings."""
    n = loadings.shape[0]
    sq = loadings**2
    return float(np.sum(np.sum(sq**2, axis=0) / n - (np.sum(sq, axis=0) / n) ** 2))


def varimax(
    loadings: np.ndarray,
    max_sweeps: int = VARIMAX_MAX_SWEEPS,
    tol: float = VARIMAX_TOL,
) -> tuple[np.ndarray, np.ndarray, list[float]]:
    """Raw varimax by pairwise planar rotations (no Kaiser normalization).

    Returns (rotated, rotation, criterion_history) with rotated =
    loadings @ rotation, rotation orthogonal, and the criterion value
    recorded after each sweep (history[0] is the starting value). Stops
    when a full sweep improves the criterion by less than `tol`.
    """
    rotated = np.array(loadings, dtype=np.float64)
    n, k = rotated.shape
    rotation = np.eye(k)
    history = [varimax_criterion(rotated)]
    if k < 2:
        return rotated, rotation, history
    for _ in range(max_sweeps):
        for p in range(k - 1):
            for q in range(p + 1, k):
                x = rotated[:, p]
                y = rotated[:, q]
                u = x**2 - y**2
                v = 2.0 * x * y
                big_a = float(np.sum(u))
                big_b = float(np.sum(v))
                big_c = float(np.sum(u**2 - v**2))
                big_d = float(np.sum(2.0 * u * v))
                num = big_d - 2.0 * big_a * big_b / n
                den = big_c - (big_a**2 - big_b**2) / n
                if num == 0.0 and den == 0.0:
                    continue
                theta = 0.25 * math.atan2(num, den)
                c, s = math.cos(theta), math.sin(theta)
                new_x = c * x + s * y
                new_y = -s * x + c * y
                rotated[:, p] = new_x
                rotated[:, q] = new_y
                rp = rotation[:, p].copy()
                rq = rotation[:, q].copy()
                rotation[:, p] = c * rp + s * rq
                rotation[:, q] = -s * rp + c * rq
        history.append(varimax_criterion(rotated))
        if history[-1] - history[-2] < tol:
            break
    return rotated, rotation, history


def varimax_rotate(
    loadings: LoadingsMatrix,
    max_sweeps: int = VARIMAX_MAX_SWEEPS,
    tol: float = VARIMAX_TOL,
) -> LoadingsMatrix:
    """Varimax-rotate a loadings matrix; communalities are preserved.

    Column signs are re-fixed after rotation. Eigenvalues are carried
    over unchanged (they describe the pre-rotation extraction).
    """
    rotated, _, _ = varimax(loadings.loadings, max_sweeps, tol)
    rotated = _fix_column_signs(rotated)
    rotated = np.clip(rotated, -1.0, 1.0)
    return LoadingsMatrix(loadings.variable_labels, rotated, loadings.eigenvalues)


def bin_loadings(loadings: LoadingsMatrix | np.ndarray, bins: int = 10) -> JointTable:
    """Histogram three-factor loadings into a bins^3 joint table.

    Each variable contributes one count to the cell indexed by
    b_i = floor((l_i + 1) / width) per factor, with width = 2/bins,
    loadings clamped into [-1, 1], and the top edge closed so l = 1
    lands in the last bin. Counts are normalized by the variable count.

    Accepts either a LoadingsMatrix or a bare variables-by-3 array;
    the array path skips the communality bound, which binning does not
    rely on.
    """
    values = loadings.loadings if isinstance(loadings, LoadingsMatrix) else np.asarray(
        loadings, dtype=np.float64
    )
    if values.ndim != 2 or values.shape[1] != 3:
        raise ArityError(f"binning needs exactly 3 factors, got shape {values.shape}")
    if bins < 2:
        raise ArityError(f"need at least 2 bins, got {bins}")
    width = 2.0 / bins
    clamped = np.clip(values, -1.0, 1.0)
    counts = np.zeros((bins, bins, bins))
    for row in clamped:
        idx = tuple(min(int(math.floor((v + 1.0) / width)), bins - 1) for v in row)
        counts[idx] += 1.0
    axes = tuple(Axis.of_size(f"factor{j + 1}", bins) for j in range(3))
    return JointTable.from_counts(axes, counts)
