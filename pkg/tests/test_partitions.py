# tests/test_partitions.py
import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.exactmath.qseries import QSeries
from app.partitions.partition import (
    Partition,
    SkewShape,
    all_skew_shapes,
    conjugate,
    contains,
    content,
    hook_length,
    n_stat,
    parse_partition,
    partitions_of,
    partitions_up_to,
    subpartitions,
)
from app.partitions.principal import principal_e, principal_h, principal_schur, principal_skew_schur_limit

some_partition = st.integers(min_value=0, max_value=8).flatmap(lambda m: st.sampled_from(partitions_of(m)))


def test_parse_partition():
    assert parse_partition("6,6,4,3") == Partition.of(6, 6, 4, 3)
    assert parse_partition("") == Partition()
    assert parse_partition("0") == Partition()
    assert parse_partition(None) == Partition()


@pytest.mark.parametrize("text", ["3,4", "2,x", "3,0", "-1"])
def test_parse_partition_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


def test_one_based_indexing():
    lam = Partition.of(4, 2)
    assert (lam[1], lam[2], lam[3]) == (4, 2, 0)
    assert lam.padded(4) == (4, 2, 0, 0)
    with pytest.raises(IndexError):
        lam[0]


@given(some_partition)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_conjugate_and_n_statistic():
    assert conjugate(Partition.of(6, 6, 4, 3)) == Partition.of(4, 4, 4, 3, 2, 2)
    assert n_stat(Partition.of(2, 1)) == 1
    assert n_stat(Partition.of(3, 3)) == 3
    assert hook_length(Partition.of(2, 1), 1, 1) == 3
    assert (content(1, 1), content(2, 5), content(3, 1)) == (0, 3, -2)
    assert conjugate(Partition()) == Partition()
    assert conjugate(Partition.of(1, 1, 1)) == Partition.of(3)


def test_partition_counts():
    assert len(partitions_of(5)) == 7
    assert len(partitions_of(5, max_parts=2)) == 3
    assert len(partitions_up_to(3)) == 7


def test_subpartitions_in_canonical_order():
    assert subpartitions(Partition.of(2, 1)) == [
        Partition(), Partition.of(1), Partition.of(1, 1), Partition.of(2), Partition.of(2, 1)
    ]
    assert all(contains(Partition.of(3, 2), mu) for mu in subpartitions(Partition.of(3, 2)))


def test_skew_shape_cells():
    shape = SkewShape(Partition.of(2, 2), Partition.of(1))
    assert shape.cells() == [(1, 2), (2, 1), (2, 2)]
    assert shape.size == 3
    assert (1, 1) not in shape
    with pytest.raises(ValueError):
        SkewShape(Partition.of(1), Partition.of(2))


def test_all_skew_shapes_excludes_empty():
    shapes = all_skew_shapes(2, 2)
    assert all(shape.size > 0 for shape in shapes)
    assert SkewShape(Partition.of(1, 1), Partition.of(1)) in shapes


def test_principal_schur():
    assert principal_schur(Partition.of(1), 2, 4) == QSeries(4, [1, 1])
    assert principal_schur(Partition.of(2, 1), 2, 4) == QSeries(4, [0, 1, 1])
    assert principal_schur(Partition.of(1, 1, 1), 2, 4) == QSeries.zero(4)


def test_principal_h_and_e():
    assert principal_h(2, 2, 5) == QSeries(5, [1, 1, 1])
    assert principal_e(3, 2, 5) == QSeries(5, [0, 1, 1, 1])
    assert principal_e(2, 3, 5) == QSeries.zero(5)


def test_principal_skew_schur_limit():
    assert principal_skew_schur_limit(SkewShape(Partition.of(1)), 4) == QSeries(4, [1] * 5)
    # s_{(1,1)}(1, q, q², ...) = q/((1-q)(1-q²))
    assert principal_skew_schur_limit(SkewShape(Partition.of(1, 1)), 4) == QSeries(4, [0, 1, 1, 2, 2])
