"""Maximum-entropy fitting of margin constraints and derived measures.

Given a joint table and a set of margins (subsets of its axes), the
fitter starts from the uniform table and cyclically rescales cells so
that each constrained margin matches the margin of the input table.
The fixed point is the maximum-entropy table consistent with those
margins, so the entropy difference

    I = H(fitted) - H(input)

is a non-negative, Shannon-type interaction information. Together with
the co-information mu* this yields the redundancy R = I - mu*.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .errors import ArityError, MarginCoverageError
from .measures import co_information, entropy
from .table import JointTable

DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_ITERATIONS = 10_000


def normalize_margins(margins: Sequence[Sequence[str]]) -> tuple[tuple[str, ...], ...]:
    """Canonical constraint order: members sorted within each margin,
    margins sorted lexicographically, duplicates dropped. Determinism of
    the fit depends on this order being fixed."""
    return tuple(sorted({tuple(sorted(m)) for m in margins}))


def all_pairs(names: Sequence[str]) -> tuple[tuple[str, ...], ...]:
    """Every two-axis margin over `names`, in canonical order."""
    return normalize_margins(combinations(sorted(names), 2))


@dataclass(frozen=True)
class IpfResult:
    """Outcome of one iterative proportional fit."""

    fitted: JointTable
    iterations: int
    max_margin_error: float
    converged: bool
    error_history: tuple[float, ...] = field(default=(), repr=False)


def _margin_drop_axes(table: JointTable, margins) -> list[tuple[int, ...]]:
    normalized = normalize_margins(margins)
    if not normalized:
        raise MarginCoverageError("at least one margin is required")
    covered: set[str] = set()
    drops = []
    for margin in normalized:
        if not margin:
            raise MarginCoverageError("empty margin")
        keep = {table.axis_index(name) for name in margin}
        covered.update(margin)
        drops.append(tuple(i for i in range(len(table.axes)) if i not in keep))
    uncovered = set(table.axis_names) - covered
    if uncovered:
        raise MarginCoverageError(
            f"margins leave axes unconstrained: {sorted(uncovered)}"
        )
    return drops


def ipf_fit(
    table: JointTable,
    margins: Sequence[Sequence[str]],
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> IpfResult:
    """Fit the maximum-entropy table matching the input's margins.

    Parameters
    ----------
    table:
        Source of the target margins.
    margins:
        Subsets of axis names; together they must cover every axis.
    tolerance:
        Convergence threshold on the largest absolute discrepancy
        between any fitted margin cell and its target.
    max_iterations:
        Budget of full cycles through the constraint set. Exhausting it
        returns a result with ``converged=False`` rather than raising;
        empirical tables sometimes need the caller to decide.

    One iteration is one full cycle through all constraints in canonical
    order; the error is evaluated after each complete cycle. A scaling
    step with a zero target margin cell zeroes the matching fit cells,
    and 0/0 factors are defined as 0, so zeros never divide.
    """
    drops = _margin_drop_axes(table, margins)
    targets = [table.cells.sum(axis=d, keepdims=True) for d in drops]
    fit = np.full(table.shape, 1.0 / table.cells.size)
    iterations = 0
    history: list[float] = []
    err = np.inf
    while iterations < max_iterations:
        for drop, target in zip(drops, targets):
            current = fit.sum(axis=drop, keepdims=True)
            factor = np.divide(
                target, current, out=np.zeros_like(target), where=current > 0
            )
            fit *= factor
        iterations += 1
        err = max(
            float(np.max(np.abs(fit.sum(axis=d, keepdims=True) - t)))
            for d, t in zip(drops, targets)
        )
        history.append(err)
        if err <= tolerance:
            break
    # rescaling keeps the total at 1 only up to float error; snap it
    fit /= fit.sum()
    return IpfResult(
        fitted=JointTable(table.axes, fit),
        iterations=iterations,
        max_margin_error=err,
        converged=err <= tolerance,
        error_history=tuple(history),
    )


def interaction_information(
    table: JointTable,
    margins: Sequence[Sequence[str]],
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> float:
    """I = H(maxent fit) - H(table), in bits. Non-negative up to float
    noise whenever the fit converged."""
    result = ipf_fit(table, margins, tolerance, max_iterations)
    return entropy(result.fitted) - entropy(table)


def redundancy(i: float, mu_star: float) -> float:
    """R = I - mu*. Positive R is remaining redundancy, negative R
    remaining uncertainty."""
    return i - mu_star


@dataclass(frozen=True)
class MeasureReport:
    """Every measure for a three-axis table, computed in one pass.

    `redundancy` uses R = I - mu*; `r_krippendorff` keeps the older
    I - Q convention for comparison (they differ by 2*mu*).
    """

    axis_entropies: Mapping[str, float]
    pair_entropies: Mapping[str, float]
    joint_entropy: float
    mu_star: float
    q: float
    interaction_information: float
    redundancy: float
    r_krippendorff: float
    ipf_converged: bool
    ipf_iterations: int
    ipf_max_margin_error: float
    tolerance: float
    max_iterations: int

    def to_dict(self) -> dict:
        return {
            "axis_entropies": dict(self.axis_entropies),
            "pair_entropies": dict(self.pair_entropies),
            "joint_entropy": self.joint_entropy,
            "mu_star": self.mu_star,
            "q": self.q,
            "interaction_information": self.interaction_information,
            "redundancy": self.redundancy,
            "r_krippendorff": self.r_krippendorff,
            "ipf": {
                "converged": self.ipf_converged,
                "iterations": self.ipf_iterations,
                "max_margin_error": self.ipf_max_margin_error,
            },
            "settings": {
                "tolerance": self.tolerance,
                "max_iterations": self.max_iterations,
            },
        }


def full_report(
    table: JointTable,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> MeasureReport:
    """All measures for a three-axis table with margins fixed to the
    three pairs. Non-convergence of the fit is reported in the ipf
    fields, not raised."""
    if len(table.axes) != 3:
        raise ArityError(f"full report needs exactly 3 axes, got {len(table.axes)}")
    names = list(table.axis_names)
    margins = all_pairs(names)
    result = ipf_fit(table, margins, tolerance, max_iterations)
    h_joint = entropy(table)
    i = entropy(result.fitted) - h_joint
    mu = co_information(table)
    q = -mu
    return MeasureReport(
        axis_entropies={n: entropy(table, [n]) for n in sorted(names)},
        pair_entropies={",".join(pair): entropy(table, pair) for pair in margins},
        joint_entropy=h_joint,
        mu_star=mu,
        q=q,
        interaction_information=i,
        redundancy=redundancy(i, mu),
        r_krippendorff=i - q,
        ipf_converged=result.converged,
        ipf_iterations=result.iterations,
        ipf_max_margin_error=result.max_margin_error,
        tolerance=tolerance,
        max_iterations=max_iterations,
    )
