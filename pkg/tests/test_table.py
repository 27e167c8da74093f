import numpy as np
import pytest

from interinfo.errors import AxisNotFoundError, TableError
from interinfo.table import Axis, JointTable, axes_like


class TestAxis:
    def test_of_size_labels(self):
        axis = Axis.of_size("x", 3)
        assert axis.categories == ("0", "1", "2")
        assert axis.cardinality == 3

    def test_rejects_empty_name(self):
        with pytest.raises(TableError):
            Axis("", ("a",))

    def test_rejects_duplicate_categories(self):
        with pytest.raises(TableError):
            Axis("x", ("a", "a"))

    def test_rejects_empty_categories(self):
        with pytest.raises(TableError):
            Axis("x", ())


class TestConstruction:
    def test_flat_cells_are_reshaped_row_major(self):
        t = JointTable(axes_like(["x", "y"], (2, 2)), [0.1, 0.2, 0.3, 0.4])
        assert t.cells[0, 1] == 0.2
        assert t.cells[1, 0] == 0.3

    def test_rejects_negative_cells(self):
        with pytest.raises(TableError, match="negative"):
            JointTable(axes_like(["x"], (2,)), [1.1, -0.1])

    def test_rejects_bad_total(self):
        with pytest.raises(TableError, match="sum"):
            JointTable(axes_like(["x"], (2,)), [0.5, 0.6])

    def test_tolerates_tiny_normalization_error(self):
        JointTable(axes_like(["x"], (2,)), [0.5, 0.5 + 1e-10])

    def test_rejects_duplicate_axis_names(self):
        with pytest.raises(TableError, match="duplicate"):
            JointTable((Axis.of_size("x", 2), Axis.of_size("x", 2)), np.full((2, 2), 0.25))

    def test_rejects_shape_mismatch(self):
        with pytest.raises(TableError, match="shape"):
            JointTable(axes_like(["x", "y"], (2, 3)), np.full((2, 2), 0.25))

    def test_from_counts_normalizes(self):
        t = JointTable.from_counts(axes_like(["x"], (2,)), [3, 1])
        assert t.cells.tolist() == [0.75, 0.25]

    def test_from_counts_rejects_zero_total(self):
        with pytest.raises(TableError, match="total"):
            JointTable.from_counts(axes_like(["x"], (2,)), [0, 0])

    def test_uniform(self):
        t = JointTable.uniform(axes_like(["x", "y"], (2, 4)))
        assert np.all(t.cells == 0.125)

    def test_cells_are_read_only(self):
        t = JointTable.uniform(axes_like(["x"], (4,)))
        with pytest.raises(ValueError):
            t.cells[0] = 1.0

    def test_instances_are_immutable(self):
        t = JointTable.uniform(axes_like(["x"], (4,)))
        with pytest.raises(AttributeError):
            t.axes = ()


class TestLookup:
    def test_axis_index(self):
        t = JointTable.uniform(axes_like(["x", "y", "z"], (2, 2, 2)))
        assert t.axis_index("y") == 1

    def test_axis_index_missing(self):
        t = JointTable.uniform(axes_like(["x"], (2,)))
        with pytest.raises(AxisNotFoundError, match="w"):
            t.axis_index("w")

    def test_axis_names(self):
        t = JointTable.uniform(axes_like(["a", "b"], (2, 2)))
        assert t.axis_names == ("a", "b")


class TestJsonRoundTrip:
    def test_bit_exact(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            shape = tuple(rng.integers(2, 5, size=int(rng.integers(1, 4))))
            names = [f"v{i}" for i in range(len(shape))]
            cells = rng.random(shape)
            t = JointTable.from_counts(axes_like(names, shape), cells)
            back = JointTable.from_json(t.to_json())
            assert back == t
            assert np.array_equal(back.cells, t.cells)

    def test_axes_survive(self):
        t = JointTable(
            (Axis("color", ("red", "blue")), Axis("size", ("s", "m", "l"))),
            np.full((2, 3), 1 / 6),
        )
        back = JointTable.from_json(t.to_json())
        assert back.axes == t.axes

    def test_rejects_garbage(self):
        with pytest.raises(TableError):
            JointTable.from_json("{not json")
        with pytest.raises(TableError):
            JointTable.from_json('{"cells": [1.0]}')


class TestCsvRoundTrip:
    def test_bit_exact(self):
        rng = np.random.default_rng(6)
        t = JointTable.from_counts(axes_like(["x", "y", "z"], (2, 3, 2)), rng.random((2, 3, 2)))
        back = JointTable.from_csv(t.to_csv())
        assert back == t

    def test_header_and_shape(self):
        t = JointTable.uniform(axes_like(["row", "col"], (2, 2)))
        lines = t.to_csv().splitlines()
        assert lines[0] == "row,col,p"
        assert len(lines) == 5

    def test_category_order_is_first_appearance(self):
        text = "x,p\nhigh,0.25\nlow,0.75\n"
        t = JointTable.from_csv(text)
        assert t.axes[0].categories == ("high", "low")

    def test_rejects_missing_p_column(self):
        with pytest.raises(TableError, match="'p'"):
            JointTable.from_csv("x,q\n0,1.0\n")

    def test_rejects_wrong_row_count(self):
        with pytest.raises(TableError, match="rows"):
            JointTable.from_csv("x,y,p\n0,0,0.5\n0,1,0.25\n1,0,0.25\n")


class TestFileIo:
    def test_write_read_by_suffix(self, tmp_path):
        t = JointTable.from_counts(axes_like(["x", "y"], (2, 2)), [[1, 2], [3, 4]])
        for name in ("t.json", "t.csv"):
            path = tmp_path / name
            t.write(path)
            assert JointTable.read(path) == t


def test_axes_like_validates_lengths():
    with pytest.raises(TableError):
        axes_like(["x"], (2, 2))
