# app/qjacobi/moments.py
import logging
from fractions import Fraction
from functools import lru_cache
from typing import List

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.qseries import QSeries, gauss_binomial, qpoch_inverse_series, qpoch_series
from app.exactmath.rational import gauss_binomial_value, nonzero, qpoch_value
from app.lhcomb.bounded_sequence import Variant
from app.lhcomb.closed_forms import NEG_UV, U_SQUARED
from app.lhcomb.sequence_enumerator import genfun_enum
from app.qjacobi.params import SpecParams
from app.qjacobi.univariate import polynomial_family, recurrence_coefficients

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


@lru_cache(maxsize=8192)
def mu_mixed(n: int, k: int, params: SpecParams) -> Fraction:
    """
    混合矩 μ_{n,k} = [n k] (aq^{k+1})_{n-k} / (abq^{2k+2})_{n-k}

    n < k 时为0。
    """
    if k < 0 or n < k:
        return Fraction(0)
    q, a, ab = params.q, params.a, params.ab
    num = gauss_binomial_value(n, k, q) * qpoch_value(a * q ** (k + 1), q, n - k)
    den = qpoch_value(ab * q ** (2 * k + 2), q, n - k)
    return num / nonzero(den, f"(abq^{2 * k + 2})_{n - k}")


@lru_cache(maxsize=8192)
def nu_mixed(n: int, k: int, params: SpecParams) -> Fraction:
    """对偶混合矩 ν_{n,k} = (-1)^{n-k} q^{C(n-k,2)} [n k] (aq^{k+1})_{n-k} / (abq^{n+k+1})_{n-k}"""
    if k < 0 or n < k:
        return Fraction(0)
    q, a, ab = params.q, params.a, params.ab
    d = n - k
    num = (-1) ** d * q ** (d * (d - 1) // 2) * gauss_binomial_value(n, k, q) * qpoch_value(a * q ** (k + 1), q, d)
    den = qpoch_value(ab * q ** (n + k + 1), q, d)
    return num / nonzero(den, f"(abq^{n + k + 1})_{d}")


@lru_cache(maxsize=8192)
def mu_series(n: int, k: int, cap: int) -> QSeries:
    """a = -uv, b = -u/v 时的 μ_{n,k}，展开为 q 的截断级数（ab = u²）"""
    if k < 0 or n < k:
        return QSeries.zero(cap)
    d = n - k
    return (gauss_binomial(n, k, cap) * qpoch_series(NEG_UV, k + 1, d, cap)
            * qpoch_inverse_series(U_SQUARED, 2 * k + 2, d, cap))


@lru_cache(maxsize=8192)
def nu_series(n: int, k: int, cap: int) -> QSeries:
    if k < 0 or n < k:
        return QSeries.zero(cap)
    d = n - k
    series = (gauss_binomial(n, k, cap) * qpoch_series(NEG_UV, k + 1, d, cap)
              * qpoch_inverse_series(U_SQUARED, n + k + 1, d, cap)).shift(d * (d - 1) // 2)
    return series if d % 2 == 0 else -series


def mu_vs_alhc(n: int, k: int, cap: int) -> bool:
    """μ_{n,k}(-uv, -u/v) = AL_{n,n-k}(u, v, q)"""
    lhs = mu_series(n, k, cap)
    rhs = genfun_enum(Variant.AL, n, n - k, cap)
    ok = lhs == rhs
    if not ok:
        logger.error(f"μ_{{{n},{k}}} 与 AL_{{{n},{n - k}}} 不一致: {lhs.first_mismatch(rhs)}")
    return ok


def nu_vs_lhp(n: int, k: int, cap: int) -> bool:
    """ν_{n,k}(-uv, -u/v) = (-1)^{n-k} L_{n,n-k}(u, v, q)"""
    lhs = nu_series(n, k, cap)
    rhs = genfun_enum(Variant.L, n, n - k, cap)
    if (n - k) % 2:
        rhs = -rhs
    ok = lhs == rhs
    if not ok:
        logger.error(f"ν_{{{n},{k}}} 与 L_{{{n},{n - k}}} 不一致: {lhs.first_mismatch(rhs)}")
    return ok


def moment_matrix(size: int, params: SpecParams, dual: bool = False) -> List[List[Fraction]]:
    entry = nu_mixed if dual else mu_mixed
    return [[entry(i, j, params) for j in range(size)] for i in range(size)]


def _matmul(left: List[List[Fraction]], right: List[List[Fraction]]) -> List[List[Fraction]]:
    size = len(left)
    return [[sum((left[i][t] * right[t][j] for t in range(size)), Fraction(0)) for j in range(size)]
            for i in range(size)]


def moment_inverse_check(size: int, params: SpecParams) -> bool:
    """Σ_i μ_{m,i} ν_{i,n} = Σ_i ν_{m,i} μ_{i,n} = δ_{m,n}"""
    mu = moment_matrix(size, params)
    nu = moment_matrix(size, params, dual=True)
    identity = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    ok = _matmul(mu, nu) == identity and _matmul(nu, mu) == identity
    if not ok:
        logger.error(f"μ 与 ν 矩阵不互逆: size={size}, {params.to_json()}")
    return ok


def mu_recurrence_check(size: int, params: SpecParams) -> bool:
    """
    混合矩满足 μ_{n,k} = μ_{n-1,k-1} + b_k μ_{n-1,k} + λ_{k+1} μ_{n-1,k+1}

    由 x·p_k = p_{k+1} + b_k p_k + λ_k p_{k-1} 得到。
    """
    coefficients = [recurrence_coefficients(k, params) for k in range(size + 1)]
    for n in range(1, size):
        for k in range(n + 1):
            expected = (mu_mixed(n - 1, k - 1, params)
                        + coefficients[k].b * mu_mixed(n - 1, k, params)
                        + coefficients[k + 1].lam * mu_mixed(n - 1, k + 1, params))
            if mu_mixed(n, k, params) != expected:
                logger.error(f"μ_{{{n},{k}}} 不满足递推: {params.to_json()}")
                return False
    return True


def dual_moment_coefficients_check(n_max: int, params: SpecParams) -> bool:
    """ν_{n,k} 等于 p_n 中 x^k 的系数"""
    for n, poly in enumerate(polynomial_family(n_max, params)):
        for k in range(n + 1):
            if poly.coefficient(k) != nu_mixed(n, k, params):
                logger.error(f"ν_{{{n},{k}}} 与 p_{n} 的系数不一致: {params.to_json()}")
                return False
    return True
