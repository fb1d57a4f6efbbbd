# tests/test_lhcomb.py
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.exactmath.qseries import QSeries
from app.lhcomb.bounded_sequence import (
    BoundedSequence,
    Variant,
    denominators,
    minus_map,
    plus_map,
    validate_sequence,
)
from app.lhcomb.closed_forms import genfun_closed
from app.lhcomb.lh_functions import (
    anti_lecture_hall_theorem_check,
    e_h_inverse_check,
    e_series,
    ebar_series,
    h_series,
    hbar_series,
    lecture_hall_theorem_check,
    orthogonality_check,
)
from app.lhcomb.sequence_enumerator import enum_set, genfun_enum, plus_map_check

GRID = [(variant, n, k) for variant in Variant for n in range(1, 5) for k in range(n + 1)]


def test_variant_parsing_and_denominators():
    assert Variant.parse("albar") is Variant.ALBAR
    assert Variant.L.plus is Variant.LBAR and Variant.ALBAR.minus is Variant.AL
    assert denominators(Variant.L, 5, 3) == (5, 4, 3)
    assert denominators(Variant.AL, 5, 3) == (3, 4, 5)
    with pytest.raises(ValueError):
        Variant.parse("LL")
    with pytest.raises(ValueError):
        denominators(Variant.L, 2, 3)


def test_anti_lecture_hall_composition_statistics():
    seq = BoundedSequence(Variant.AL, 8, (5, 4, 5, 5, 3, 3))
    assert validate_sequence(seq)
    assert seq.rounded() == (1, 1, 1, 0, 0, 0)
    assert seq.statistics() == (25, 3, 3)


def test_truncated_lecture_hall_partition_statistics():
    seq = BoundedSequence(Variant.L, 8, (15, 12, 8, 5, 3, 0))
    assert validate_sequence(seq)
    assert seq.statistics() == (43, 4, 4)
    assert not validate_sequence(BoundedSequence(Variant.L, 8, (15, 14, 8, 5, 3, 0)))


def test_small_enumeration():
    members = enum_set(Variant.L, 2, 2, 3)
    assert [seq.entries for seq in members] == [(1, 0), (2, 0), (3, 0)]
    assert [seq.entries for seq in enum_set(Variant.LBAR, 2, 0, 3)] == [()]


@pytest.mark.parametrize("variant,n,k", GRID)
def test_enumeration_matches_product_formula(variant, n, k):
    assert genfun_enum(variant, n, k, 10) == genfun_closed(variant, n, k, 10)


def test_closed_form_rejects_bad_length():
    with pytest.raises(ValueError):
        genfun_closed(Variant.AL, 2, 3, 5)


@given(st.sampled_from([Variant.L, Variant.AL]), st.integers(min_value=1, max_value=4), st.data())
@settings(max_examples=30, deadline=None)
def test_plus_map_round_trip(variant, n, data):
    k = data.draw(st.integers(min_value=0, max_value=n))
    members = enum_set(variant, n, k, 6)
    seq = data.draw(st.sampled_from(members))
    image = plus_map(seq)
    assert image.variant is variant.plus
    assert validate_sequence(image)
    assert minus_map(image) == seq


def test_plus_map_rejects_bar_input():
    with pytest.raises(ValueError):
        plus_map(BoundedSequence(Variant.LBAR, 2, (3, 1)))
    with pytest.raises(ValueError):
        minus_map(BoundedSequence(Variant.L, 2, (1, 0)))


@pytest.mark.parametrize("variant", [Variant.L, Variant.AL])
@pytest.mark.parametrize("n,k", [(1, 1), (3, 2), (4, 4)])
def test_plus_map_is_bijection(variant, n, k):
    assert plus_map_check(variant, n, k, 8)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lecture_hall_theorems(n):
    assert lecture_hall_theorem_check(n, 10)
    assert anti_lecture_hall_theorem_check(n, 10)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (2, 1), (3, 0), (3, 3)])
def test_h_e_orthogonality(m, n):
    assert orthogonality_check(m, n, 8)


def test_e_h_matrices_are_inverse():
    assert e_h_inverse_check(4, 6)


def test_h_of_degree_zero_and_bar_functions():
    assert h_series(3, 0, 5) == QSeries.one(5)
    assert h_series(3, -1, 5) == QSeries.zero(5)
    assert hbar_series(2, 2, 8) == genfun_enum(Variant.ALBAR, 3, 2, 8)
    assert ebar_series(3, 2, 8) == genfun_enum(Variant.LBAR, 3, 2, 8)
    assert ebar_series(2, 3, 8) == QSeries.zero(8)


def test_h_and_e_are_truncated_generating_functions():
    assert h_series(2, 2, 9) == genfun_closed(Variant.AL, 3, 2, 9)
    assert e_series(4, 0, 9) == QSeries.one(9)
    assert e_series(3, 2, 9) == genfun_closed(Variant.L, 3, 2, 9)
