# tests/conftest.py
import pytest

from app.partitions.partition import Partition, SkewShape
from app.qjacobi.params import SpecParams
from app.tableaux.tableau import OrderType, tableau_from_rows


@pytest.fixture
def sample_tableau():
    """n=5、形状 (6,6,4,3)/(3,1) 的 (≥,>) 型讲堂表，元素和为41"""
    shape = SkewShape(Partition.of(6, 6, 4, 3), Partition.of(3, 1))
    rows = [[9, 4, 3], [5, 6, 4, 3, 1], [2, 2, 1, 0], [1, 0, 0]]
    return tableau_from_rows(shape, rows, OrderType.named("ge-gt", 5))


@pytest.fixture
def default_params():
    return SpecParams.default()


@pytest.fixture
def uv_params():
    return SpecParams.default_uv()
