import numpy as np
import pytest

from pruneclust.core.dendrogram import build_tree
from pruneclust.core.loss import node_losses
from pruneclust.models.data import DataMatrix

FIVE_POINTS = [13.0, 0.0, 10.0, 1.0, 3.0]

# Two far points plus a tight group whose optimal 3- and 4-leaf cuts are not nested
NON_NESTED_ROWS = [
    (1000.0, 0.0), (1028.0, 0.0),
    (0.0, 0.0), (0.0, 0.0), (0.0, 0.0),
    (10.0, 0.0), (10.0, 0.0), (10.0, 0.0),
    (5.0, 9.0),
]


@pytest.fixture
def five_points() -> DataMatrix:
    return DataMatrix(np.array(FIVE_POINTS))


@pytest.fixture
def five_tree(five_points):
    return build_tree(five_points)


@pytest.fixture
def five_table(five_points, five_tree):
    return node_losses(five_points, five_tree)


@pytest.fixture
def five_csv(tmp_path):
    path = tmp_path / "five.csv"
    path.write_text("x\n13\n0\n10\n1\n3\n")
    return path


@pytest.fixture
def non_nested_points() -> DataMatrix:
    return DataMatrix.from_rows(NON_NESTED_ROWS)


@pytest.fixture
def random_data():
    """Factory for seeded standard normal datasets."""

    def make(seed: int, n: int, p: int) -> DataMatrix:
        return DataMatrix(np.random.default_rng(seed).standard_normal((n, p)))

    return make


@pytest.fixture
def four_blobs():
    """Factory for four tight, well separated 2-D clusters of 10 points each."""

    def make(seed: int):
        rng = np.random.default_rng(seed)
        centers = np.array([[0.0, 0.0], [20.0, 0.0], [0.0, 20.0], [20.0, 20.0]])
        labels = np.repeat(np.arange(4), 10)
        return DataMatrix(centers[labels] + rng.standard_normal((40, 2))), labels.tolist()

    return make
