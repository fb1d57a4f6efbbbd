# tests/test_tableaux.py
from typing import Optional, get_type_hints

import pytest

from app.exactmath.laurent import LaurentPoly
from app.exactmath.qseries import QSeries
from app.partitions.partition import Partition, SkewShape
from app.partitions.principal import principal_schur
from app.tableaux.enumerator import count_tableaux, list_tableaux, ls_series, tableau_plus_check
from app.tableaux.jacobi_trudi import jacobi_trudi
from app.tableaux.product_formula import ls_product, stability_check
from app.tableaux.tableau import (
    NAMED_TYPES,
    OrderType,
    tableau_from_json,
    tableau_from_rows,
    tableau_minus,
    tableau_plus,
    tableau_to_json,
    validate,
    weight,
)

TYPES = sorted(NAMED_TYPES)
STRAIGHT = [Partition.of(1), Partition.of(2), Partition.of(1, 1), Partition.of(2, 1), Partition.of(3, 1)]
SKEW = [
    SkewShape(Partition.of(2, 1), Partition.of(1)),
    SkewShape(Partition.of(2, 2), Partition.of(1)),
    SkewShape(Partition.of(3, 2), Partition.of(1)),
    SkewShape(Partition.of(2, 2, 1), Partition.of(1, 1)),
]


def test_sample_tableau_is_valid(sample_tableau):
    assert validate(sample_tableau)
    assert sample_tableau.size == 41
    assert len(sample_tableau.entries) == 15
    assert weight(sample_tableau, bar=False) == (41, LaurentPoly.monomial(3, 3))
    assert weight(sample_tableau, bar=True) == (41, LaurentPoly.monomial(13, 11))
    # 默认按类型取下取整
    assert weight(sample_tableau) == weight(sample_tableau, bar=False)


def test_weight_bar_flag_is_optional():
    assert get_type_hints(weight)["bar"] == Optional[bool]
    t = tableau_from_rows(SkewShape(Partition.of(1)), [[3]], OrderType.named("gt-ge", 2))
    # 带横线类型默认取上取整：3/2 -> 2
    assert weight(t, bar=None) == weight(t, bar=True) == (3, LaurentPoly.monomial(2, 0))


def test_sample_tableau_json_round_trip(sample_tableau):
    data = tableau_to_json(sample_tableau)
    assert data["type"] == "ge-gt" and data["inner"] == [3, 1]
    assert tableau_from_json(data) == sample_tableau


def test_broken_ratio_is_rejected(sample_tableau):
    rows = sample_tableau.rows()
    rows[0][0] = 3
    assert not validate(tableau_from_rows(sample_tableau.shape, rows, sample_tableau.type))


def test_order_type_names():
    assert OrderType.named("lt-le", 3) == OrderType("<", "<=", 3)
    assert OrderType("≥", "gt", 2).name == "ge-gt"
    assert OrderType.named("gt-ge", 3).is_bar
    with pytest.raises(ValueError):
        OrderType.named("ge-ge", 3)
    with pytest.raises(ValueError):
        OrderType(">=", ">", 0)


def test_shape_too_long_for_n():
    with pytest.raises(ValueError):
        count_tableaux(SkewShape(Partition.of(1, 1, 1)), OrderType.named("ge-gt", 2), 4)


def test_single_cell_counts():
    assert count_tableaux(SkewShape(Partition.of(1)), OrderType.named("ge-gt", 2), 0) == 1
    assert count_tableaux(SkewShape(Partition.of(1)), OrderType.named("ge-gt", 1), 3) == 4
    assert count_tableaux(SkewShape(Partition.of(1)), OrderType.named("gt-ge", 1), 3) == 3
    listed = list_tableaux(SkewShape(Partition.of(1)), OrderType.named("ge-gt", 1), 2)
    assert [t.rows() for t in listed] == [[[0]], [[1]], [[2]]]


def test_single_cell_series_matches_product():
    series = ls_series(SkewShape(Partition.of(1)), OrderType.named("ge-gt", 1), 4)
    expected = QSeries(4, [1, LaurentPoly.monomial(1, 1), LaurentPoly.monomial(2, 0),
                           LaurentPoly.monomial(3, 1), LaurentPoly.monomial(4, 0)])
    assert series == expected
    assert ls_product(Partition.of(1), OrderType.named("ge-gt", 1), 4) == expected


def test_lt_le_prefactor_on_a_single_row():
    # n=1, λ=(2)：u=v=0 时只有 (0,1)，权重 q
    order_type = OrderType.named("lt-le", 1)
    expected = QSeries(3, [0, 1])
    assert ls_series(SkewShape(Partition.of(2)), order_type, 3).specialize(0, 0) == expected
    assert ls_product(Partition.of(2), order_type, 3).specialize(0, 0) == expected


@pytest.mark.parametrize("name", TYPES)
@pytest.mark.parametrize("lam", STRAIGHT)
def test_product_formula(name, lam):
    order_type = OrderType.named(name, 3)
    assert ls_series(SkewShape(lam), order_type, 8) == ls_product(lam, order_type, 8)


def test_product_formula_on_sample_shape_outer():
    order_type = OrderType.named("ge-gt", 4)
    lam = Partition.of(3, 2, 1)
    assert ls_series(SkewShape(lam), order_type, 9) == ls_product(lam, order_type, 9)


@pytest.mark.parametrize("form", ["h", "e"])
@pytest.mark.parametrize("name", TYPES)
@pytest.mark.parametrize("shape", SKEW + [SkewShape(lam) for lam in STRAIGHT[:4]])
def test_jacobi_trudi(form, name, shape):
    order_type = OrderType.named(name, 3)
    assert jacobi_trudi(shape, order_type, 7, form) == ls_series(shape, order_type, 7)


def test_jacobi_trudi_rejects_unknown_form():
    with pytest.raises(ValueError):
        jacobi_trudi(SkewShape(Partition.of(1)), OrderType.named("ge-gt", 1), 3, "p")


@pytest.mark.parametrize("lam,n", [(Partition.of(1), 1), (Partition.of(2, 1), 2), (Partition.of(2, 2, 1), 4)])
def test_principal_specialization(lam, n):
    series = ls_series(SkewShape(lam), OrderType.named("ge-gt", n), 8).specialize(0, 0)
    assert series == principal_schur(lam, n, 8)


@pytest.mark.parametrize("shape,n", [(SkewShape(Partition.of(2, 1)), 3), (SKEW[0], 4), (SkewShape(Partition.of(1)), 5)])
def test_stability_in_n(shape, n):
    assert stability_check(shape, n, 8)


def test_plus_map_on_sample(sample_tableau):
    image = tableau_plus(sample_tableau)
    assert image.type.name == "gt-ge"
    assert validate(image)
    assert tableau_minus(image) == sample_tableau
    with pytest.raises(ValueError):
        tableau_plus(image)


@pytest.mark.parametrize("name", ["ge-gt", "lt-le"])
@pytest.mark.parametrize("shape", [SkewShape(Partition.of(2, 1)), SKEW[1]])
def test_plus_map_is_weight_preserving_bijection(name, shape):
    assert tableau_plus_check(shape, OrderType.named(name, 3), 6)


def test_plus_check_rejects_bar_types():
    with pytest.raises(ValueError):
        tableau_plus_check(SkewShape(Partition.of(1)), OrderType.named("gt-ge", 2), 3)
