# tests/test_qjacobi.py
import random
from fractions import Fraction

import pytest

from app.exactmath.multipoly import MultiPoly
from app.lhcomb.lh_functions import h_series
from app.partitions.partition import Partition, partitions_up_to
from app.qjacobi.determinant_identities import det_lemma_check, det_prop_check
from app.qjacobi.functional import (
    FunctionalValue,
    functional_moment_check,
    functional_orthogonality_check,
    functional_univariate,
    ratio_bound,
    tail_bound,
)
from app.qjacobi.moments import (
    dual_moment_coefficients_check,
    moment_inverse_check,
    mu_mixed,
    mu_recurrence_check,
    mu_series,
    mu_vs_alhc,
    nu_mixed,
    nu_vs_lhp,
)
from app.qjacobi.multivariate import (
    expansion_check,
    moment_product_check,
    mixed_moment_M,
    moment_product_rational_check,
    multivariate_p,
    schur_poly,
)
from app.qjacobi.params import SpecParams, random_params
from app.qjacobi.selberg import selberg_check
from app.qjacobi.univariate import (
    UniPoly,
    little_q_jacobi,
    little_q_jacobi_hypergeometric,
    little_q_jacobi_recurrence,
    recurrence_coefficients,
)


def test_params_validation():
    with pytest.raises(ValueError):
        SpecParams(1, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        SpecParams(0, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        SpecParams.from_uv("1/2", "1/3", 0)


def test_params_from_uv(uv_params):
    # a = -uv, b = -u/v
    assert uv_params.a == Fraction(-2, 35)
    assert uv_params.b == Fraction(-7, 10)
    assert uv_params.to_json() == {"q": "1/3", "a": "-2/35", "b": "-7/10", "u": "1/5", "v": "2/7"}


def test_random_params_are_reproducible():
    first = random_params(random.Random(7))
    assert first == random_params(random.Random(7))
    assert 0 < first.q < 1 and first.a != 0 and not first.has_pole()


def test_first_polynomials(default_params):
    assert little_q_jacobi(0, default_params) == UniPoly.constant(1)
    # p_1 = x - (1-aq)/(1-abq²)
    assert little_q_jacobi(1, default_params) == UniPoly((Fraction(-651, 629), 1))
    assert recurrence_coefficients(0, default_params).lam == 0
    with pytest.raises(ValueError):
        little_q_jacobi(-1, default_params)


def test_univariate_polynomial_arithmetic():
    x = UniPoly.x()
    p = (x - Fraction(1, 2)) * (x + 2)
    assert p == UniPoly((-1, Fraction(3, 2), 1))
    assert p.coeffs == (Fraction(-1), Fraction(3, 2), Fraction(1))
    assert p.coefficient(2) == 1 and p.coefficient(5) == 0
    assert p.evaluate(Fraction(1, 2)) == 0
    assert p.evaluate(1) == Fraction(3, 2)
    assert p.abs_coefficient_sum() == Fraction(7, 2)
    assert p.to_json() == ["-1", "3/2", "1"]
    assert 1 - x == UniPoly((1, -1))
    assert UniPoly.monomial(3) == x * x * x
    assert UniPoly((1, 0, 0)) == UniPoly.constant(1)
    assert UniPoly().degree == -1 and not UniPoly()
    assert hash(UniPoly((0, 1))) == hash(x)
    with pytest.raises(TypeError):
        x + 0.5
    with pytest.raises(ValueError):
        UniPoly.monomial(-1)


@pytest.mark.parametrize("n", range(7))
def test_recurrence_matches_hypergeometric(n, default_params, uv_params):
    for params in (default_params, uv_params):
        p = little_q_jacobi_recurrence(n, params)
        assert p == little_q_jacobi_hypergeometric(n, params)
        assert p.degree == n and p.is_monic()


def test_mixed_moments_vanish_below_diagonal(default_params):
    assert mu_mixed(2, 3, default_params) == 0
    assert nu_mixed(1, 2, default_params) == 0
    assert mu_mixed(3, 3, default_params) == nu_mixed(3, 3, default_params) == 1
    assert mu_mixed(1, 0, default_params) == Fraction(651, 629)


@pytest.mark.parametrize("seed", range(4))
def test_moment_matrices(seed):
    params = random_params(random.Random(seed))
    assert moment_inverse_check(6, params)
    assert mu_recurrence_check(6, params)
    assert dual_moment_coefficients_check(5, params)


@pytest.mark.parametrize("n,k", [(1, 0), (2, 1), (3, 0), (3, 2), (4, 1)])
def test_moments_count_bounded_sequences(n, k):
    assert mu_vs_alhc(n, k, 8)
    assert nu_vs_lhp(n, k, 8)


def test_functional_value_interval():
    value = FunctionalValue(Fraction(1), Fraction(1, 100))
    assert value.contains(Fraction(101, 100))
    assert not value.contains(Fraction(102, 100))
    assert value.to_json() == {"value": "1", "bound": "1/100"}


def test_functional_of_zero_polynomial(default_params):
    assert functional_univariate(UniPoly(), default_params) == FunctionalValue(Fraction(0), Fraction(0))


def test_tail_bound_errors(default_params):
    assert tail_bound(default_params, 40) < Fraction(1, 10 ** 40)
    with pytest.raises(ValueError):
        tail_bound(SpecParams("1/2", 3, 0), 10)
    with pytest.raises(ValueError):
        # q^{K+1}/(1-q) ≥ 1
        tail_bound(SpecParams("9/10", "1/2", 0), 1)


def test_ratio_bound():
    assert ratio_bound(Fraction(1), Fraction(0), Fraction(2), Fraction(0)) == 0
    with pytest.raises(ValueError):
        ratio_bound(Fraction(1), Fraction(0), Fraction(1, 10), Fraction(1, 10))


@pytest.mark.parametrize("n", range(6))
def test_functional_moments(n, default_params):
    assert functional_moment_check(n, default_params)


@pytest.mark.parametrize("m,n", [(0, 1), (1, 2), (0, 3), (2, 4)])
def test_functional_orthogonality(m, n, default_params):
    assert functional_orthogonality_check(m, n, default_params)


def test_functional_orthogonality_needs_distinct_degrees(default_params):
    with pytest.raises(ValueError):
        functional_orthogonality_check(2, 2, default_params)


def test_schur_polynomials():
    x1, x2 = MultiPoly.variable(1, 2), MultiPoly.variable(2, 2)
    assert schur_poly(Partition.of(1), 2) == x1 + x2
    assert schur_poly(Partition.of(1, 1), 2) == x1 * x2
    assert schur_poly(Partition.of(2), 2) == x1 * x1 + x1 * x2 + x2 * x2
    with pytest.raises(ValueError):
        schur_poly(Partition.of(1, 1, 1), 2)


@pytest.mark.parametrize("lam,n", [(Partition.of(1), 1), (Partition.of(2), 2), (Partition.of(2, 1), 2), (Partition.of(1, 1), 3)])
def test_expansions(lam, n, default_params):
    assert expansion_check(lam, n, default_params)


def test_expansion_against_tableau_series(default_params):
    assert expansion_check(Partition.of(2, 1), 2, default_params, cap=6)


@pytest.mark.parametrize("lam,n", [(lam, n) for n in (1, 2, 3) for lam in partitions_up_to(4, n)])
def test_expansions_at_uv_parameters(lam, n, uv_params):
    # q=1/3, u=1/5, v=2/7
    assert expansion_check(lam, n, uv_params, cap=10)


@pytest.mark.parametrize("lam,n", [(Partition.of(1), 1), (Partition.of(2, 1), 2), (Partition.of(2, 2), 3), (Partition.of(3, 1), 2)])
def test_moment_products(lam, n, default_params, uv_params):
    assert moment_product_check(lam, n, 7)
    assert moment_product_rational_check(lam, n, default_params)
    assert moment_product_rational_check(lam, n, uv_params)


@pytest.mark.parametrize("lam,n", [(Partition.of(1), 1), (Partition(), 2), (Partition.of(1), 2), (Partition.of(2, 1), 2)])
def test_selberg_integral(lam, n, default_params):
    result = selberg_check(lam, n, default_params, terms=30)
    assert result.ok
    assert result.to_json()["ok"] is True


def test_selberg_rejects_too_few_terms(default_params):
    with pytest.raises(ValueError):
        selberg_check(Partition.of(1), 1, default_params, terms=2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_determinant_lemma(n):
    assert det_lemma_check(n, draws=4, seed=n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_determinant_evaluation(n):
    assert det_prop_check(n, draws=4, seed=n)


def test_determinant_checks_reject_empty_order():
    with pytest.raises(ValueError):
        det_lemma_check(0)


def test_moment_as_complete_homogeneous_function():
    # μ_{3,1} = AL_{3,2} = h_2^{(2)}
    assert mu_series(3, 1, 9) == h_series(2, 2, 9)


@pytest.mark.parametrize("lam,n", [(Partition.of(1), 2), (Partition.of(2, 1), 2), (Partition.of(1), 3)])
def test_multivariate_polynomials_are_symmetric(lam, n, default_params):
    p = multivariate_p(lam, n, default_params)
    for i in range(n - 1):
        swap = list(range(n))
        swap[i], swap[i + 1] = swap[i + 1], swap[i]
        assert p.permute(swap) == p
    assert mixed_moment_M(lam, lam, n, default_params) == 1
