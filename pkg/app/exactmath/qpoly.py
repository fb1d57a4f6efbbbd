# app/exactmath/qpoly.py
from functools import lru_cache
from typing import Iterable, List

from sympy import ZZ
from sympy.polys.rings import ring

from app.exactmath.qseries import QSeries


@lru_cache(maxsize=None)
def _q_ring():
    R, q = ring("q", ZZ)
    return R, q


def one_minus_q_power(e: int):
    """1 - q^e（e ≥ 1）"""
    if e < 1:
        raise ValueError(f"指数必须为正: {e}")
    R, q = _q_ring()
    return R.one - q ** e


def cyclotomic_quotient(numerator_exps: Iterable[int], denominator_exps: Iterable[int]) -> List[int]:
    """
    ∏(1 - q^a) / ∏(1 - q^b) 的整数系数（必须整除）

    Args:
        numerator_exps: 分子各因子的指数
        denominator_exps: 分母各因子的指数
    """
    R, _ = _q_ring()
    num = R.one
    for a in numerator_exps:
        num *= one_minus_q_power(a)
    den = R.one
    for b in denominator_exps:
        den *= one_minus_q_power(b)
    quotient, remainder = divmod(num, den)
    if remainder:
        raise ArithmeticError("q多项式除法余数非零")
    degree = quotient.degree() if quotient else 0
    coeffs = [0] * (max(degree, 0) + 1)
    for (d,), c in quotient.items():
        coeffs[d] = int(c)
    return coeffs


def polynomial_series(coeffs: List[int], shift: int, cap: int) -> QSeries:
    """q^shift · Σ c_d q^d 截断"""
    if shift < 0:
        raise ValueError(f"平移必须非负: {shift}")
    return QSeries(cap, [0] * shift + list(coeffs[: max(cap + 1 - shift, 0)]))
