import numpy as np
import pytest

from interinfo.table import Axis, JointTable, axes_like


@pytest.fixture
def xor_table() -> JointTable:
    """z = x XOR y with uniform inputs; the canonical negative-mu* triple."""
    cells = np.zeros((2, 2, 2))
    for x in (0, 1):
        for y in (0, 1):
            cells[x, y, (x + y) % 2] = 0.25
    return JointTable(axes_like(["x", "y", "z"], (2, 2, 2)), cells)


@pytest.fixture
def copy_table() -> JointTable:
    """x = y = z, a fair bit copied twice; mu* = +1."""
    cells = np.zeros((2, 2, 2))
    cells[0, 0, 0] = 0.5
    cells[1, 1, 1] = 0.5
    return JointTable(axes_like(["x", "y", "z"], (2, 2, 2)), cells)


@pytest.fixture
def independent_table() -> JointTable:
    """Product of three non-uniform independent margins."""
    px = np.array([0.3, 0.7])
    py = np.array([0.6, 0.4])
    pz = np.array([0.2, 0.8])
    cells = px[:, None, None] * py[None, :, None] * pz[None, None, :]
    return JointTable(axes_like(["x", "y", "z"], (2, 2, 2)), cells)


def random_table(rng: np.random.Generator, shape: tuple[int, ...],
                 names: list[str] | None = None, sparse: bool = False) -> JointTable:
    """Random table helper shared by the oracle and property suites."""
    if names is None:
        names = [f"v{i}" for i in range(len(shape))]
    cells = rng.random(shape)
    if sparse:
        cells *= rng.random(shape) < 0.5
        if cells.sum() == 0:
            cells.flat[0] = 1.0
    return JointTable.from_counts(axes_like(names, shape), cells)
