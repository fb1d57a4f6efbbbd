# app/lhcomb/lh_functions.py
import logging
from functools import lru_cache
from typing import Tuple

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.laurent import LaurentPoly
from app.exactmath.qseries import QSeries
from app.lhcomb.bounded_sequence import Variant
from app.lhcomb.closed_forms import anti_lecture_hall_series, lecture_hall_series
from app.lhcomb.sequence_enumerator import genfun_enum

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def h_series(n: int, k: int, cap: int) -> QSeries:
    """
    完全齐次讲堂函数 h_k^{(n)} 的主特殊化 = AL_{n+k-1,k}

    k < 0 时为0，k = 0 时为1。
    """
    if k < 0:
        return QSeries.zero(cap)
    if k == 0:
        return QSeries.one(cap)
    if n < 1:
        raise ValueError(f"h_k^(n) 需要 n ≥ 1: n={n}")
    return genfun_enum(Variant.AL, n + k - 1, k, cap)


@lru_cache(maxsize=4096)
def e_series(n: int, k: int, cap: int) -> QSeries:
    """初等讲堂函数 e_k^{(n)} 的主特殊化 = L_{n,k}；k > n 时为0"""
    if k < 0 or k > n:
        return QSeries.zero(cap)
    return genfun_enum(Variant.L, n, k, cap)


def _bar(series: QSeries, k: int) -> QSeries:
    # x⁺ 在主特殊化下每个元素多一个q
    return series.invert_v().shift(k) * LaurentPoly.monomial(k, k)


@lru_cache(maxsize=4096)
def hbar_series(n: int, k: int, cap: int) -> QSeries:
    """h̄_k^{(n)} = (uvq)^k h_k^{(n)}(u, 1/v)"""
    if k < 0:
        return QSeries.zero(cap)
    return _bar(h_series(n, k, cap), k)


@lru_cache(maxsize=4096)
def ebar_series(n: int, k: int, cap: int) -> QSeries:
    """ē_k^{(n)} = (uvq)^k e_k^{(n)}(u, 1/v)"""
    if k < 0 or k > n:
        return QSeries.zero(cap)
    return _bar(e_series(n, k, cap), k)


def orthogonality_check(m: int, n: int, cap: int) -> bool:
    """
    h 与 e 的组合正交关系（两种乘法顺序）

    Σ_i h^{(i+1)}_{m-i} (-1)^{i-n} e^{(i)}_{i-n} = δ_{m,n}
    Σ_i (-1)^{m-i} e^{(m)}_{m-i} h^{(n+1)}_{i-n} = δ_{m,n}
    """
    expected = QSeries.one(cap) if m == n else QSeries.zero(cap)
    first = QSeries.zero(cap)
    second = QSeries.zero(cap)
    for i in range(m + 1):
        if i >= n:
            term = h_series(i + 1, m - i, cap) * e_series(i, i - n, cap)
            first = first + term if (i - n) % 2 == 0 else first - term
            term = e_series(m, m - i, cap) * h_series(n + 1, i - n, cap)
            second = second + term if (m - i) % 2 == 0 else second - term
    ok = first == expected and second == expected
    if not ok:
        logger.error(f"正交关系失败: m={m}, n={n}, cap={cap}")
    return ok


def e_h_inverse_check(size: int, cap: int) -> bool:
    """对所有 0 ≤ n ≤ m < size 检查 h 与 e 两种顺序的正交关系"""
    return all(orthogonality_check(m, n, cap) for m in range(size) for n in range(m + 1))


def lecture_hall_theorem_sides(n: int, cap: int) -> Tuple[QSeries, QSeries]:
    """
    讲堂定理两边：Σ q^{|λ|} over {λ_n/n ≥ ... ≥ λ_1/1 ≥ 0} 与 1/(q; q²)_n

    正部分构成的前缀恰好是 L̄_{n,k}，按 k 求和。
    """
    total = QSeries.zero(cap)
    for k in range(n + 1):
        total = total + genfun_enum(Variant.LBAR, n, k, cap).specialize(1, 1)
    return total, lecture_hall_series(n, cap)


def anti_lecture_hall_theorem_sides(n: int, cap: int) -> Tuple[QSeries, QSeries]:
    """反讲堂定理两边：Σ q^{|λ|} over {λ_1/1 ≥ ... ≥ λ_n/n ≥ 0} 与 (-q; q)_n / (q²; q)_n"""
    return genfun_enum(Variant.AL, n, n, cap).specialize(1, 1), anti_lecture_hall_series(n, cap)


def lecture_hall_theorem_check(n: int, cap: int) -> bool:
    total, expected = lecture_hall_theorem_sides(n, cap)
    ok = total == expected
    if not ok:
        logger.error(f"讲堂定理在 n={n} 不成立: {total.first_mismatch(expected)}")
    return ok


def anti_lecture_hall_theorem_check(n: int, cap: int) -> bool:
    total, expected = anti_lecture_hall_theorem_sides(n, cap)
    ok = total == expected
    if not ok:
        logger.error(f"反讲堂定理在 n={n} 不成立: {total.first_mismatch(expected)}")
    return ok
