# tests/test_exactmath.py
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.exactmath.determinant import det, det_by_cofactor, det_by_elimination
from app.exactmath.laurent import LaurentPoly
from app.exactmath.multipoly import MultiPoly, vandermonde
from app.exactmath.qpoly import cyclotomic_quotient
from app.exactmath.qseries import QSeries, gauss_binomial, qpoch_inverse_series, qpoch_series
from app.exactmath.ratio import bound_left, bound_right, ratio_holds
from app.exactmath.rational import format_rational, gauss_binomial_value, parse_rational, qpoch_value
from app.exactmath.serializer import dumps, qseries_from_json, qseries_to_json, qseries_to_tsv

small = st.integers(min_value=-3, max_value=3)
laurent = st.dictionaries(st.tuples(small, small), st.integers(min_value=-5, max_value=5), max_size=4).map(LaurentPoly)
series = st.lists(laurent, min_size=1, max_size=6).map(lambda cs: QSeries(5, cs))


@given(laurent, laurent, laurent)
@settings(max_examples=60, deadline=None)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly.zero()


@given(laurent)
def test_invert_v_is_involution(a):
    assert a.invert_v().invert_v() == a


def test_laurent_specialize_and_evaluate():
    p = LaurentPoly({(1, 1): 2, (0, -1): 3})
    assert p.specialize(1, 1) == LaurentPoly.constant(5)
    assert p.specialize(v=-1) == LaurentPoly({(1, 0): -2, (0, 0): -3})
    assert p.evaluate(2, Fraction(1, 3)) == Fraction(4, 3) + 9
    with pytest.raises(ValueError):
        p.specialize(v=0)


def test_laurent_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly.coerce(Fraction(1, 2))


@given(series, series)
@settings(max_examples=40, deadline=None)
def test_series_product_commutes(a, b):
    assert a * b == b * a


@given(st.lists(laurent, min_size=1, max_size=6), st.sampled_from([1, -1]), small, small)
@settings(max_examples=40, deadline=None)
def test_series_inverse(tail, sign, i, j):
    s = QSeries(5, [LaurentPoly.monomial(i, j, sign)] + tail[1:])
    assert s * s.inverse() == QSeries.one(5)


def test_series_cap_mismatch_rejected():
    with pytest.raises(ValueError):
        QSeries.one(3) + QSeries.one(4)


def test_series_shift_truncates():
    s = QSeries(3, [1, 2, 3, 4])
    assert s.shift(2) == QSeries(3, [0, 0, 1, 2])
    assert s.truncate(1) == QSeries(1, [1, 2])
    with pytest.raises(ValueError):
        s.truncate(5)


def test_first_mismatch_reports_lowest_degree():
    a = QSeries(4, [1, 1, 2, 3])
    b = QSeries(4, [1, 1, 5, 0])
    d, left, right = a.first_mismatch(b)
    assert d == 2 and left == LaurentPoly.constant(2) and right == LaurentPoly.constant(5)
    assert a.first_mismatch(a) is None


def test_gauss_binomial_coefficients():
    assert gauss_binomial(4, 2, 10) == QSeries(10, [1, 1, 2, 1, 1])
    assert gauss_binomial(3, 5, 4) == QSeries.zero(4)


def test_qpoch_series_and_inverse():
    assert qpoch_series(1, 1, 2, 5) == QSeries(5, [1, -1, -1, 1])
    assert qpoch_inverse_series(1, 1, 1, 4) == QSeries(4, [1, 1, 1, 1, 1])
    uv = LaurentPoly.monomial(1, 1, -1)
    assert qpoch_series(uv, 1, 3, 8) * qpoch_inverse_series(uv, 1, 3, 8) == QSeries.one(8)


def test_parse_and_format_rational():
    assert parse_rational("1/3") == Fraction(1, 3)
    assert parse_rational(" -1/10 ") == Fraction(-1, 10)
    assert parse_rational("1e-15") == Fraction(1, 10 ** 15)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    with pytest.raises(TypeError):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational("one third")


def test_rational_pochhammer_values():
    half = Fraction(1, 2)
    assert qpoch_value(half, half, 2) == Fraction(3, 8)
    assert qpoch_value(half, half, 0) == 1
    assert gauss_binomial_value(2, 1, Fraction(1, 3)) == Fraction(4, 3)
    assert gauss_binomial_value(2, 3, half) == 0


def test_ratio_comparison_by_cross_multiplication():
    assert ratio_holds(1, 2, "<", 2, 3)
    assert ratio_holds(2, 4, ">=", 1, 2)
    assert not ratio_holds(2, 4, ">", 1, 2)
    # a/5 >= 3/4  <=>  a >= 15/4
    assert bound_left(">=", 5, 3, 4) == (4, None)
    # 3/4 > b/5  <=>  b < 15/4
    assert bound_right(3, 4, ">", 5) == (None, 3)


def test_det_of_rationals_and_series():
    assert det([[1, 2], [3, 4]]) == Fraction(-2)
    q = QSeries.monomial(1, 1, 3)
    one = QSeries.one(3)
    assert det([[one, q], [q, one]]) == QSeries(3, [1, 0, -1])
    assert det([], one=LaurentPoly.one()) == LaurentPoly.one()


def test_det_rejects_bad_input():
    with pytest.raises(ValueError):
        det([[1, 2]])
    with pytest.raises(TypeError):
        det([[QSeries.one(2), LaurentPoly.one()], [LaurentPoly.one(), LaurentPoly.one()]])
    with pytest.raises(ValueError):
        det([])


def test_elimination_agrees_with_cofactor_expansion():
    hilbert = [[Fraction(1, i + j + 1) for j in range(7)] for i in range(7)]
    assert det_by_elimination(hilbert) == det_by_cofactor(hilbert) == det(hilbert)
    pivoting = [[0, 1, 2], [3, 0, 1], [1, 1, 0]]
    assert det_by_elimination(pivoting) == det_by_cofactor(pivoting) == Fraction(7)
    assert type(det(hilbert)) is Fraction


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_multipoly_determinant_is_vandermonde(n):
    # det(x_j^{n-i}) = ∏_{i<j}(x_i - x_j)
    xs = [MultiPoly.variable(j, n) for j in range(1, n + 1)]
    matrix = [[x ** (n - i) for x in xs] for i in range(1, n + 1)]
    value = det(matrix)
    assert isinstance(value, MultiPoly)
    assert value == vandermonde(n) == det_by_cofactor(matrix)


def test_elimination_rejects_series():
    one = QSeries.one(3)
    with pytest.raises(TypeError):
        det_by_elimination([[one]])


def test_multipoly_exact_division():
    x1, x2 = MultiPoly.variable(1, 2), MultiPoly.variable(2, 2)
    assert vandermonde(2) == x1 - x2
    assert (x1 * x1 - x2 * x2).exact_div(x1 - x2) == x1 + x2
    with pytest.raises(ArithmeticError):
        x1.exact_div(x2)
    with pytest.raises(ValueError):
        x1 + MultiPoly.variable(1, 3)


def test_multipoly_permute_and_evaluate():
    x1, x2, x3 = (MultiPoly.variable(i, 3) for i in (1, 2, 3))
    p = x1 * x1 * x2 + Fraction(1, 2) * x3
    assert p.permute([1, 2, 0]) == x2 * x2 * x3 + Fraction(1, 2) * x1
    assert p.evaluate([2, 3, 4]) == 14
    assert p.abs_coefficient_sum() == Fraction(3, 2)
    assert vandermonde(3).permute([1, 0, 2]) == -vandermonde(3)


def test_cyclotomic_quotient():
    assert cyclotomic_quotient([1, 2], [1]) == [1, 1]
    with pytest.raises(ArithmeticError):
        cyclotomic_quotient([1], [2])


def test_serializer_is_versioned_and_canonical():
    s = QSeries(3, [1, 0, LaurentPoly({(1, -1): -2, (0, 0): 1})])
    document = json.loads(dumps({"series": s, "value": Fraction(1, 3)}))
    assert document["schema"] == 1
    assert document["value"] == "1/3"
    assert document["series"] == qseries_to_json(s)
    assert qseries_from_json(qseries_to_json(s)) == s
    assert qseries_to_tsv(s).splitlines() == ["q_exp\tu_exp\tv_exp\tcoeff", "0\t0\t0\t1", "2\t0\t0\t1", "2\t1\t-1\t-2"]
