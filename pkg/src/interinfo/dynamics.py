"""Recursive, incursive, and hyper-incursive logistic maps.

The recursive map is the classic x' = a x (1 - x). The incursive map
solves the same relation with the future state on the right-hand side,
x' = a x / (1 + a x), which settles on (a - 1)/a for any a > 0. The
hyper-incursive map inverts the recursion entirely, x = a x' (1 - x'),
leaving two real roots x' = 1/2 +- 1/2 sqrt(1 - (4/a) x) whenever the
discriminant is non-negative; a decision bit picks the branch at every
step.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ComplexRootError, DomainError

VARIANTS = ("recursive", "incursive", "hyper_incursive")


@dataclass(frozen=True)
class DynamicsParams:
    a: float
    x0: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise DomainError(f"steps must be >= 1, got {self.steps}")
        if not 0.0 <= self.x0 <= 1.0:
            raise DomainError(f"x0 must lie in [0, 1], got {self.x0}")


@dataclass(frozen=True)
class Trajectory:
    """States x_0..x_T plus bookkeeping.

    `decisions` holds the branch bits actually applied (hyper-incursive
    only, one per completed step). `truncated` marks a hyper-incursive
    run stopped early by a negative discriminant; `escaped` marks any
    state outside [0, 1].
    """

    values: tuple[float, ...]
    variant: str
    decisions: tuple[int, ...] | None = None
    truncated: bool = False
    escaped: bool = False

    @property
    def final(self) -> float:
        return self.values[-1]

    def to_csv(self) -> str:
        """Columns t, x, decision; the decision on row t is the bit that
        produced x_{t+1}, so the last row (and every row of non-hyper
        variants) leaves it empty."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "x", "decision"])
        for t, x in enumerate(self.values):
            d = ""
            if self.decisions is not None and t < len(self.decisions):
                d = self.decisions[t]
            writer.writerow([t, repr(float(x)), d])
        return buf.getvalue()


def recursive_step(a: float, x: float) -> float:
    """One step of x' = a x (1 - x)."""
    return a * x * (1.0 - x)


def incursive_step(a: float, x: float) -> float:
    """One step of x' = a x / (1 + a x); contraction toward (a-1)/a."""
    return a * x / (1.0 + a * x)


def hyper_incursive_step(a: float, x: float, decision: int) -> float:
    """One step of x' = 1/2 +- 1/2 sqrt(1 - (4/a) x).

    decision=1 takes the upper root, decision=0 the lower. A negative
    discriminant (x > a/4) has no real root and raises ComplexRootError.
    """
    discriminant = 1.0 - (4.0 / a) * x
    if discriminant < 0.0:
        raise ComplexRootError(a, x, discriminant)
    half_root = 0.5 * math.sqrt(discriminant)
    return 0.5 + half_root if decision else 0.5 - half_root


def steady_state_incursive(a: float) -> float:
    """Nonzero fixed point (a - 1)/a of the incursive map."""
    if a <= 0:
        raise DomainError(f"growth parameter must be positive, got {a}")
    return (a - 1.0) / a


def simulate(
    params: DynamicsParams,
    variant: str,
    decisions: Sequence[int] | None = None,
    seed: int | None = None,
) -> Trajectory:
    """Iterate one of the three maps from x0 for `params.steps` steps.

    Hyper-incursive runs need one decision bit per step: an explicit
    `decisions` list takes precedence; otherwise bits are drawn from a
    seeded generator (seed defaults to 0 so runs are reproducible). A
    complex-root condition mid-run truncates the trajectory and sets the
    `truncated` flag instead of raising.
    """
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    values = [float(params.x0)]
    applied: list[int] = []
    truncated = False
    if variant == "hyper_incursive":
        if decisions is not None:
            bits = [int(b) for b in decisions]
            if len(bits) < params.steps:
                raise DomainError(
                    f"need {params.steps} decision bits, got {len(bits)}"
                )
        else:
            rng = np.random.default_rng(0 if seed is None else seed)
            bits = [int(b) for b in rng.integers(0, 2, size=params.steps)]
        for t in range(params.steps):
            try:
                nxt = hyper_incursive_step(params.a, values[-1], bits[t])
            except ComplexRootError:
                truncated = True
                break
            applied.append(bits[t])
            values.append(nxt)
    else:
        step = recursive_step if variant == "recursive" else incursive_step
        for _ in range(params.steps):
            values.append(step(params.a, values[-1]))
    escaped = any(not 0.0 <= v <= 1.0 for v in values)
    return Trajectory(
        values=tuple(values),
        variant=variant,
        decisions=tuple(applied) if variant == "hyper_incursive" else None,
        truncated=truncated,
        escaped=escaped,
    )


def sweep_csv(
    a_values: Iterable[float],
    x0: float,
    steps: int,
    variant: str,
    seed: int | None = None,
) -> str:
    """Long-format CSV over several growth parameters: a, t, x, decision."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "t", "x", "decision"])
    for a in a_values:
        traj = simulate(DynamicsParams(a=a, x0=x0, steps=steps), variant, seed=seed)
        for t, x in enumerate(traj.values):
            d = ""
            if traj.decisions is not None and t < len(traj.decisions):
                d = traj.decisions[t]
            writer.writerow([repr(float(a)), t, repr(float(x)), d])
    return buf.getvalue()
