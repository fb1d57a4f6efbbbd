# app/lhcomb/closed_forms.py
from app.exactmath.laurent import LaurentPoly
from app.exactmath.qseries import QSeries, gauss_binomial, qpoch_inverse_series, qpoch_series
from app.lhcomb.bounded_sequence import Variant

# 常用单项式
NEG_UV = LaurentPoly.monomial(1, 1, -1)  # -uv
NEG_U_OVER_V = LaurentPoly.monomial(1, -1, -1)  # -u/v
U_SQUARED = LaurentPoly.monomial(2, 0)  # u²


def _assert_invertible(m: int) -> None:
    # 0 ≤ k ≤ n 时分母的起始q指数总是正的
    assert m >= 1, f"分母含q^0因子: 起始指数 {m}"


def genfun_closed(variant: Variant, n: int, k: int, cap: int) -> QSeries:
    """
    四个截断集合的乘积公式

    L     = q^{C(k,2)} [n k] (-uv q^{n-k+1})_k / (u² q^{2n-k+1})_k
    L̄     = (uvq)^k · L(v -> 1/v)
    AL    = [n k] (-uv q^{n-k+1})_k / (u² q^{2n-2k+2})_k
    AL̄    = (uvq)^k · AL(v -> 1/v)

    Args:
        variant: 集合类型
        n: 参数 n
        k: 长度
        cap: 截断次数
    """
    if not 0 <= k <= n:
        raise ValueError(f"需要 0 ≤ k ≤ n: n={n}, k={k}")
    if variant.is_bar:
        base = genfun_closed(variant.minus, n, k, cap).invert_v()
        return base.shift(k) * LaurentPoly.monomial(k, k)
    binom = gauss_binomial(n, k, cap)
    numerator = qpoch_series(NEG_UV, n - k + 1, k, cap)
    if variant is Variant.L:
        start = 2 * n - k + 1
        _assert_invertible(start)
        return (binom * numerator * qpoch_inverse_series(U_SQUARED, start, k, cap)).shift(k * (k - 1) // 2)
    start = 2 * n - 2 * k + 2
    _assert_invertible(start)
    return binom * numerator * qpoch_inverse_series(U_SQUARED, start, k, cap)


def lecture_hall_series(n: int, cap: int) -> QSeries:
    """1/(q; q²)_n"""
    result = QSeries.one(cap)
    for i in range(n):
        result = result * qpoch_inverse_series(1, 2 * i + 1, 1, cap)
    return result


def anti_lecture_hall_series(n: int, cap: int) -> QSeries:
    """(-q; q)_n / (q²; q)_n"""
    return qpoch_series(-1, 1, n, cap) * qpoch_inverse_series(1, 2, n, cap)
