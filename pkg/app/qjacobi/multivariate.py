# app/qjacobi/multivariate.py
import logging
from fractions import Fraction
from typing import List, Optional

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.determinant import det
from app.exactmath.multipoly import MultiPoly, vandermonde
from app.exactmath.qseries import QSeries
from app.exactmath.rational import nonzero, qpoch_value
from app.partitions.partition import Partition, SkewShape, conjugate, contains, n_stat, subpartitions
from app.qjacobi.moments import mu_mixed, mu_series, nu_mixed, nu_series
from app.qjacobi.params import SpecParams
from app.qjacobi.univariate import UniPoly, little_q_jacobi
from app.tableaux.enumerator import ls_series
from app.tableaux.product_formula import ls_product
from app.tableaux.tableau import OrderType

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


def _require_length(lam: Partition, n: int) -> None:
    if n < 1:
        raise ValueError(f"变量个数必须为正: {n}")
    if len(lam) > n:
        raise ValueError(f"需要 ℓ(λ) ≤ n: λ={lam}, n={n}")


def poly_in_variable(p: UniPoly, i: int, n: int) -> MultiPoly:
    """把一元多项式 p(x) 写成 p(x_i)"""
    terms = {}
    for k, c in enumerate(p.coeffs):
        monomial = [0] * n
        monomial[i - 1] = k
        terms[tuple(monomial)] = c
    return MultiPoly.from_terms(terms, n)


def _bialternant(lam: Partition, n: int, column) -> MultiPoly:
    # det(column(λ_j+n-j, i)) / Δ(x)
    matrix = [[column(lam[j] + n - j, i) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det(matrix).exact_div(vandermonde(n))


def schur_poly(lam: Partition, n: int) -> MultiPoly:
    """s_λ(x_1..x_n) = det(x_i^{λ_j+n-j}) / Δ(x)"""
    _require_length(lam, n)
    return _bialternant(lam, n, lambda e, i: MultiPoly.variable(i, n) ** e)


def multivariate_p(lam: Partition, n: int, params: SpecParams) -> MultiPoly:
    """
    多元 little q-Jacobi 多项式 det(p_{λ_j+n-j}(x_i)) / Δ(x)

    Args:
        lam: 分拆，ℓ(λ) ≤ n
        n: 变量个数
        params: 有理参数
    """
    _require_length(lam, n)
    return _bialternant(lam, n, lambda e, i: poly_in_variable(little_q_jacobi(e, params), i, n))


def _moment_rows(lam: Partition, mu: Partition, n: int) -> List[List[tuple]]:
    return [[(lam[i] + n - i, mu[j] + n - j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _moment_det(lam: Partition, mu: Partition, n: int, entry) -> Fraction:
    _require_length(lam, n)
    _require_length(mu, n)
    value = det([[entry(a, b) for a, b in row] for row in _moment_rows(lam, mu, n)])
    if value and not contains(lam, mu):
        raise ArithmeticError(f"μ={mu} 不包含于 λ={lam}，行列式却非零")
    return value


def mixed_moment_M(lam: Partition, mu: Partition, n: int, params: SpecParams) -> Fraction:
    """M_{λ,μ}(n) = det(μ_{λ_i+n-i, μ_j+n-j})；μ ⊄ λ 时为0"""
    return _moment_det(lam, mu, n, lambda a, b: mu_mixed(a, b, params))


def dual_N(lam: Partition, mu: Partition, n: int, params: SpecParams) -> Fraction:
    """N_{λ,μ}(n) = det(ν_{λ_i+n-i, μ_j+n-j})"""
    return _moment_det(lam, mu, n, lambda a, b: nu_mixed(a, b, params))


def _series_det(lam: Partition, mu: Partition, n: int, cap: int, entry) -> QSeries:
    _require_length(lam, n)
    _require_length(mu, n)
    return det([[entry(a, b, cap) for a, b in row] for row in _moment_rows(lam, mu, n)])


def M_series(lam: Partition, mu: Partition, n: int, cap: int) -> QSeries:
    """a = -uv, b = -u/v 时 M_{λ,μ}(n) 的q展开"""
    return _series_det(lam, mu, n, cap, mu_series)


def N_series(lam: Partition, mu: Partition, n: int, cap: int) -> QSeries:
    return _series_det(lam, mu, n, cap, nu_series)


def vandermonde_ratio_value(lam: Partition, n: int, q: Fraction) -> Fraction:
    """∏_{i<j} (q^{λ_j+n-j} - q^{λ_i+n-i}) / (q^{i-1} - q^{j-1})，即 s_λ(1, q, ..., q^{n-1})"""
    result = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result *= (q ** (lam[j] + n - j) - q ** (lam[i] + n - i)) / (q ** (i - 1) - q ** (j - 1))
    return result


def moment_closed(lam: Partition, n: int, params: SpecParams) -> Fraction:
    """M_{λ,∅}(n) = s_λ(1..q^{n-1}) ∏_i (aq^{n-i+1})_{λ_i} / (abq^{2n-i+1})_{λ_i}"""
    _require_length(lam, n)
    q, a, ab = params.q, params.a, params.ab
    result = vandermonde_ratio_value(lam, n, q)
    for i in range(1, n + 1):
        result *= qpoch_value(a * q ** (n - i + 1), q, lam[i])
        result /= nonzero(qpoch_value(ab * q ** (2 * n - i + 1), q, lam[i]), f"(abq^{2 * n - i + 1})_{lam[i]}")
    return result


def dual_moment_closed(lam: Partition, n: int, params: SpecParams) -> Fraction:
    """
    N_{λ,∅}(n) 的乘积公式

    (-1)^{|λ|} q^{n(λ')-n(λ)} s_λ(1..q^{n-1}) ∏_i (aq^{n-i+1})_{λ_i} / (abq^{n-i+1+λ_i})_{n-i+λ_i}
    · ∏_{i<j} (1 - abq^{2n+λ_i+λ_j-i-j+1})
    """
    _require_length(lam, n)
    q, a, ab = params.q, params.a, params.ab
    result = (-1) ** lam.size * q ** (n_stat(conjugate(lam)) - n_stat(lam)) * vandermonde_ratio_value(lam, n, q)
    for i in range(1, n + 1):
        result *= qpoch_value(a * q ** (n - i + 1), q, lam[i])
        den = qpoch_value(ab * q ** (n - i + 1 + lam[i]), q, n - i + lam[i])
        result /= nonzero(den, f"(abq^{n - i + 1 + lam[i]})_{n - i + lam[i]}")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result *= 1 - ab * q ** (2 * n + lam[i] + lam[j] - i - j + 1)
    return result


def expansion_check(lam: Partition, n: int, params: SpecParams, cap: Optional[int] = None) -> bool:
    """
    s_λ = Σ_μ M_{λ,μ} p_μ 与 p_λ = Σ_μ N_{λ,μ} s_μ 作为精确多项式恒等式成立

    给出 cap 时还逐项比较 M_{λ,μ}、N_{λ,μ} 的q展开与对应斜形状的讲堂Schur级数
    （(≥,>) 型，以及带符号 (-1)^{|λ/μ|} 的 (<,≤) 型）。

    Args:
        lam: 分拆，ℓ(λ) ≤ n
        n: 变量个数
        params: 多项式恒等式使用的有理参数
        cap: q展开的截断次数，None 表示跳过
    """
    _require_length(lam, n)
    inner = subpartitions(lam, n)
    schur_side = MultiPoly.constant(0, n)
    dual_side = MultiPoly.constant(0, n)
    for mu in inner:
        schur_side = schur_side + multivariate_p(mu, n, params) * mixed_moment_M(lam, mu, n, params)
        dual_side = dual_side + schur_poly(mu, n) * dual_N(lam, mu, n, params)
    if schur_side != schur_poly(lam, n):
        logger.error(f"s_{lam} 的展开不成立: n={n}, {params.to_json()}")
        return False
    if dual_side != multivariate_p(lam, n, params):
        logger.error(f"p_{lam} 的展开不成立: n={n}, {params.to_json()}")
        return False
    if cap is None:
        return True
    for mu in inner:
        shape = SkewShape(lam, mu)
        expected_m = ls_series(shape, OrderType.named("ge-gt", n), cap)
        expected_n = ls_series(shape, OrderType.named("lt-le", n), cap)
        if shape.size % 2:
            expected_n = -expected_n
        m_side, n_side = M_series(lam, mu, n, cap), N_series(lam, mu, n, cap)
        if m_side != expected_m:
            logger.error(f"M_{{{lam},{mu}}} 与 LS {shape} 不一致: {m_side.first_mismatch(expected_m)}")
            return False
        if n_side != expected_n:
            logger.error(f"N_{{{lam},{mu}}} 与 LS {shape} 不一致: {n_side.first_mismatch(expected_n)}")
            return False
    return True


def moment_product_check(lam: Partition, n: int, cap: int) -> bool:
    """行列式 M_{λ,∅}、N_{λ,∅} 的q展开等于 (≥,>) 与 (<,≤) 型的乘积公式"""
    _require_length(lam, n)
    m_product = ls_product(lam, OrderType.named("ge-gt", n), cap)
    n_product = ls_product(lam, OrderType.named("lt-le", n), cap)
    if lam.size % 2:
        n_product = -n_product
    empty = Partition()
    m_side, n_side = M_series(lam, empty, n, cap), N_series(lam, empty, n, cap)
    ok = m_side == m_product and n_side == n_product
    if not ok:
        mismatch = m_side.first_mismatch(m_product) or n_side.first_mismatch(n_product)
        logger.error(f"矩乘积公式不成立: λ={lam}, n={n}, 首个不一致 {mismatch}")
    return ok


def moment_product_rational_check(lam: Partition, n: int, params: SpecParams) -> bool:
    """有理点上：行列式与乘积公式一致，且 N_{λ,∅} = p_λ(0, ..., 0)"""
    empty = Partition()
    m_value = mixed_moment_M(lam, empty, n, params)
    n_value = dual_N(lam, empty, n, params)
    if m_value != moment_closed(lam, n, params):
        logger.error(f"M_{{{lam},∅}} 与乘积公式不一致: n={n}, {params.to_json()}")
        return False
    if n_value != dual_moment_closed(lam, n, params):
        logger.error(f"N_{{{lam},∅}} 与乘积公式不一致: n={n}, {params.to_json()}")
        return False
    constant = multivariate_p(lam, n, params).evaluate([0] * n)
    if n_value != constant:
        logger.error(f"N_{{{lam},∅}} ≠ p_{lam}(0): n={n}, {params.to_json()}")
        return False
    return True
