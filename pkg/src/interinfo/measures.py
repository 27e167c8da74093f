"""Shannon-style information measures on joint tables.

All entropies are in bits (base-2 logs) and use the convention
0 * log(0) = 0. Subsets of axes are given by name; marginal entropies
are computed by summing out the complement first.

The central quantity for three or more variables is the co-information
mu* (McGill's multiple mutual information): an alternating inclusion
and exclusion sum of marginal entropies over every non-empty subset of
the chosen axes. For two axes it reduces to the ordinary transmission
(mutual information) between them. Its sign is notoriously slippery for
odd interactions, which is why callers usually report Q = -mu* alongside.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ArityError, SubsetError
from .table import Axis, JointTable

MAX_CO_INFORMATION_ARITY = 16


def _subset_indices(table: JointTable, subset: Iterable[str]) -> tuple[int, ...]:
    names = list(subset)
    if len(set(names)) != len(names):
        raise SubsetError(f"duplicate axis names in subset: {names}")
    return tuple(table.axis_index(n) for n in names)


def marginalize(table: JointTable, keep: Sequence[str]) -> JointTable:
    """Sum out every axis not listed in `keep`, preserving `keep` order."""
    indices = _subset_indices(table, keep)
    if not indices:
        raise SubsetError("must keep at least one axis")
    drop = tuple(i for i in range(len(table.axes)) if i not in indices)
    cells = table.cells.sum(axis=drop) if drop else table.cells
    # reorder remaining axes to the requested order
    remaining = [i for i in range(len(table.axes)) if i not in drop]
    perm = tuple(remaining.index(i) for i in indices)
    cells = np.transpose(cells, perm)
    return JointTable(tuple(table.axes[i] for i in indices), cells)


def entropy(table: JointTable, subset: Sequence[str] | None = None) -> float:
    """Shannon entropy H (bits) of the joint or a marginal distribution.

    Parameters
    ----------
    table:
        The joint distribution.
    subset:
        Axis names whose marginal entropy is wanted. None (the default)
        means the full joint entropy over all axes.
    """
    if subset is None:
        p = table.cells.ravel()
    else:
        indices = _subset_indices(table, subset)
        if not indices:
            raise SubsetError("entropy subset must be non-empty")
        drop = tuple(i for i in range(len(table.axes)) if i not in indices)
        p = (table.cells.sum(axis=drop) if drop else table.cells).ravel()
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def transmission(table: JointTable, left: Sequence[str], right: Sequence[str]) -> float:
    """Mutual information T = H(left) + H(right) - H(left, right) in bits.

    `left` and `right` must be disjoint groups of axis names.
    """
    left = list(left)
    right = list(right)
    if not left or not right:
        raise SubsetError("both axis groups must be non-empty")
    if set(left) & set(right):
        raise SubsetError(f"axis groups overlap: {sorted(set(left) & set(right))}")
    return entropy(table, left) + entropy(table, right) - entropy(table, left + right)


def co_information(table: JointTable, subset: Sequence[str] | None = None) -> float:
    """Co-information mu* over the given axes (default: all of them).

    Computed as the alternating sum over non-empty subsets T of the
    chosen axes S:

        mu* = sum_{T subset of S, T nonempty} (-1)^(|T|+1) H(T)

    For |S| = 2 this equals the transmission; for |S| = 3 it is the
    familiar H_x + H_y + H_z - H_xy - H_xz - H_yz + H_xyz, which can be
    negative. Arity is limited to 16 axes since the sum has 2^|S| - 1
    terms.
    """
    names = list(subset) if subset is not None else list(table.axis_names)
    _subset_indices(table, names)
    k = len(names)
    if not 2 <= k <= MAX_CO_INFORMATION_ARITY:
        raise ArityError(f"co-information needs 2..{MAX_CO_INFORMATION_ARITY} axes, got {k}")
    total = 0.0
    for size in range(1, k + 1):
        sign = 1.0 if size % 2 == 1 else -1.0
        for combo in combinations(names, size):
            total += sign * entropy(table, combo)
    return total


def q_measure(table: JointTable, subset: Sequence[str] | None = None) -> float:
    """Q = -mu*, the sign-flipped co-information.

    Positive Q is often read as synergy among three variables, but the
    interpretation is contested; this package reports both conventions
    and lets downstream measures disambiguate.
    """
    return -co_information(table, subset)
