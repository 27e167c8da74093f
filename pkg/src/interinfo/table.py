"""Dense n-dimensional discrete probability tables with named axes.

A JointTable is the common currency of the package: every information
measure, every fitted distribution, and every binned factor model is one.
Cells are stored row-major (last axis fastest), normalized to sum to 1.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import AxisNotFoundError, TableError

NORMALIZATION_TOL = 1e-9


@dataclass(frozen=True)
class Axis:
    """One named dimension of a joint table, with ordered category labels."""

    name: str
    categories: tuple[str, ...]

    def __post_init__(self):
        if not self.name:
            raise TableError("axis name must be non-empty")
        object.__setattr__(self, "categories", tuple(str(c) for c in self.categories))
        if not self.categories:
            raise TableError(f"axis {self.name!r} has no categories")
        if len(set(self.categories)) != len(self.categories):
            raise TableError(f"axis {self.name!r} has duplicate categories")

    @property
    def cardinality(self) -> int:
        return len(self.categories)

    @classmethod
    def of_size(cls, name: str, size: int) -> "Axis":
        """Axis with numeric category labels "0".."size-1"."""
        if size < 1:
            raise TableError(f"axis {name!r} needs at least one category")
        return cls(name, tuple(str(i) for i in range(size)))


class JointTable:
    """Immutable joint probability distribution over named discrete axes.

    Construction validates the invariants: all cells non-negative, total
    mass 1 within 1e-9, unique axis names. Use :meth:`from_counts` to build
    from raw (unnormalized) counts.
    """

    __slots__ = ("axes", "cells")

    def __init__(self, axes: Iterable[Axis], cells):
        axes = tuple(axes)
        names = [a.name for a in axes]
        if not axes:
            raise TableError("a table needs at least one axis")
        if len(set(names)) != len(names):
            raise TableError(f"duplicate axis names: {names}")
        shape = tuple(a.cardinality for a in axes)
        arr = np.asarray(cells, dtype=np.float64)
        if arr.ndim == 1:
            arr = arr.reshape(shape)
        if arr.shape != shape:
            raise TableError(f"cells shape {arr.shape} does not match axes shape {shape}")
        if np.any(arr < 0):
            raise TableError("negative cell probability")
        total = float(arr.sum())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise TableError(f"cells sum to {total!r}, not 1 within {NORMALIZATION_TOL}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "cells", arr)

    def __setattr__(self, name, value):
        raise AttributeError("JointTable is immutable")

    @classmethod
    def from_counts(cls, axes: Iterable[Axis], counts) -> "JointTable":
        """Normalize raw non-negative counts by their total."""
        arr = np.asarray(counts, dtype=np.float64)
        total = float(arr.sum())
        if total <= 0:
            raise TableError("counts must have positive total")
        return cls(axes, arr / total)

    @classmethod
    def uniform(cls, axes: Iterable[Axis]) -> "JointTable":
        axes = tuple(axes)
        size = int(np.prod([a.cardinality for a in axes]))
        return cls(axes, np.full(tuple(a.cardinality for a in axes), 1.0 / size))

    @property
    def axis_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.axes)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.cells.shape

    def axis_index(self, name: str) -> int:
        for i, a in enumerate(self.axes):
            if a.name == name:
                return i
        raise AxisNotFoundError(f"no axis named {name!r}; axes are {list(self.axis_names)}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, JointTable):
            return NotImplemented
        return self.axes == other.axes and np.array_equal(self.cells, other.cells)

    __hash__ = None

    def __repr__(self) -> str:
        dims = ", ".join(f"{a.name}[{a.cardinality}]" for a in self.axes)
        return f"JointTable({dims})"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        """JSON form; float cells round-trip bit-exact via repr."""
        payload = {
            "axes": [{"name": a.name, "categories": list(a.categories)} for a in self.axes],
            "cells": [float(v) for v in self.cells.ravel()],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "JointTable":
        try:
            payload = json.loads(text)
            axes = tuple(Axis(a["name"], tuple(a["categories"])) for a in payload["axes"])
            cells = payload["cells"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise TableError(f"not a valid joint-table JSON document: {exc}") from exc
        return cls(axes, cells)

    def to_csv(self) -> str:
        """CSV form: one index column per axis plus a `p` column, row-major."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(self.axis_names) + ["p"])
        flat = self.cells.ravel()
        for i, combo in enumerate(product(*(a.categories for a in self.axes))):
            writer.writerow(list(combo) + [repr(float(flat[i]))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "JointTable":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or len(rows[0]) < 2 or rows[0][-1] != "p":
            raise TableError("joint-table CSV needs axis columns plus a trailing 'p' column")
        names = rows[0][:-1]
        body = [r for r in rows[1:] if r]
        # category order is the order of first appearance in each index column
        categories: list[list[str]] = [[] for _ in names]
        for row in body:
            for j in range(len(names)):
                if row[j] not in categories[j]:
                    categories[j].append(row[j])
        axes = tuple(Axis(n, tuple(c)) for n, c in zip(names, categories))
        shape = tuple(a.cardinality for a in axes)
        expected = int(np.prod(shape))
        if len(body) != expected:
            raise TableError(f"expected {expected} rows for shape {shape}, got {len(body)}")
        cells = np.zeros(shape)
        index = {n: {c: k for k, c in enumerate(cats)} for n, cats in zip(names, categories)}
        for row in body:
            idx = tuple(index[n][row[j]] for j, n in enumerate(names))
            cells[idx] = float(row[-1])
        return cls(axes, cells)

    def write(self, path: str | Path) -> None:
        """Write JSON or CSV depending on the path suffix."""
        path = Path(path)
        text = self.to_csv() if path.suffix.lower() == ".csv" else self.to_json()
        path.write_text(text)

    @classmethod
    def read(cls, path: str | Path) -> "JointTable":
        path = Path(path)
        text = path.read_text()
        if path.suffix.lower() == ".csv":
            return cls.from_csv(text)
        return cls.from_json(text)


def axes_like(names: Sequence[str], shape: Sequence[int]) -> tuple[Axis, ...]:
    """Convenience: axes with numeric categories matching `shape`."""
    if len(names) != len(shape):
        raise TableError("names and shape lengths differ")
    return tuple(Axis.of_size(n, s) for n, s in zip(names, shape))
