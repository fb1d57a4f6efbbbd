# app/qjacobi/functional.py
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Tuple

from app.config import FUNCTIONAL_TERMS, LOG_FORMAT, LOG_LEVEL
from app.exactmath.rational import format_rational
from app.qjacobi.moments import mu_mixed
from app.qjacobi.params import SpecParams
from app.qjacobi.univariate import UniPoly, little_q_jacobi

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FunctionalValue:
    """部分和及其严格误差上界：真实值落在 [value - bound, value + bound] 内"""

    value: Fraction
    bound: Fraction

    def contains(self, target: Fraction) -> bool:
        return abs(self.value - target) <= self.bound

    def to_json(self) -> Dict[str, Any]:
        return {"value": format_rational(self.value), "bound": format_rational(self.bound)}


@lru_cache(maxsize=256)
def functional_weights(params: SpecParams, terms: int) -> Tuple[Fraction, ...]:
    """w_k = (bq)_k / (q)_k · (aq)^k，k = 0..terms-1"""
    if terms < 1:
        raise ValueError(f"项数必须为正: {terms}")
    q, a, b = params.q, params.a, params.b
    weights = [Fraction(1)]
    for k in range(1, terms):
        weights.append(weights[-1] * (1 - b * q ** k) / (1 - q ** k) * a * q)
    return tuple(weights)


@lru_cache(maxsize=256)
def tail_bound(params: SpecParams, terms: int) -> Fraction:
    """
    Σ_{k≥K} |w_k| 的几何上界

    |w_k| ≤ P_k |aq|^k，P_k = ∏_{i≤k} (1+|b|q^i)/(1-q^i)；
    k ≥ K 时 P_k ≤ P_K / ((1-|b|σ)(1-σ))，σ = q^{K+1}/(1-q)。

    Args:
        params: 有理参数
        terms: 部分和项数 K
    """
    q, b = params.q, abs(params.b)
    ratio = abs(params.a * q)
    if ratio >= 1:
        raise ValueError(f"泛函发散: |aq| = {format_rational(ratio)} ≥ 1")
    sigma = q ** (terms + 1) / (1 - q)
    if sigma >= 1 or b * sigma >= 1:
        raise ValueError(f"项数 K={terms} 太小，无法给出尾项上界")
    prefix = Fraction(1)
    for i in range(1, terms + 1):
        prefix *= (1 + b * q ** i) / (1 - q ** i)
    return prefix / ((1 - b * sigma) * (1 - sigma)) * ratio ** terms / (1 - ratio)


def functional_univariate(f: UniPoly, params: SpecParams, terms: int = FUNCTIONAL_TERMS) -> FunctionalValue:
    """
    L(f) = Σ_{k≥0} (bq)_k/(q)_k (aq)^k f(q^k) 的前 K 项与尾项上界

    在 [0,1] 上 |f(q^k)| ≤ Σ|系数|，故尾项上界为 Σ|系数| 乘以权重尾和。
    """
    if not f:
        return FunctionalValue(Fraction(0), Fraction(0))
    weights = functional_weights(params, terms)
    q = params.q
    value = sum((w * f.evaluate(q ** k) for k, w in enumerate(weights)), Fraction(0))
    return FunctionalValue(value, f.abs_coefficient_sum() * tail_bound(params, terms))


def ratio_bound(a: Fraction, err_a: Fraction, b: Fraction, err_b: Fraction) -> Fraction:
    """
    |A'/B' - A/B| 的上界，其中 |A' - A| ≤ err_a，|B' - B| ≤ err_b

    结果为 (|A|ε_B + |B|ε_A) / (|B|(|B| - ε_B))。
    """
    if abs(b) <= err_b:
        raise ValueError("分母的误差上界不小于分母本身，无法给出比值上界")
    return (abs(a) * err_b + abs(b) * err_a) / (abs(b) * (abs(b) - err_b))


def normalized_functional(f: UniPoly, params: SpecParams, terms: int = FUNCTIONAL_TERMS) -> FunctionalValue:
    """L(f)/L(1) 及其上界"""
    top = functional_univariate(f, params, terms)
    unit = functional_univariate(UniPoly.constant(1), params, terms)
    return FunctionalValue(top.value / unit.value, ratio_bound(top.value, top.bound, unit.value, unit.bound))


def functional_moment_check(n: int, params: SpecParams, terms: int = FUNCTIONAL_TERMS) -> bool:
    """L(x^n)/L(1) 与 (aq)_n/(abq²)_n 在上界内一致"""
    monomial = UniPoly.monomial(n)
    result = normalized_functional(monomial, params, terms)
    expected = mu_mixed(n, 0, params)
    ok = result.contains(expected)
    if not ok:
        logger.error(f"L(x^{n})/L(1) 偏离矩: 差 {float(result.value - expected):.3e}，上界 {float(result.bound):.3e}")
    return ok


def functional_orthogonality_check(m: int, n: int, params: SpecParams, terms: int = FUNCTIONAL_TERMS) -> bool:
    """m ≠ n 时 L(p_m p_n) 在上界内为0"""
    if m == n:
        raise ValueError(f"需要 m ≠ n: {m}")
    result = functional_univariate(little_q_jacobi(m, params) * little_q_jacobi(n, params), params, terms)
    ok = result.contains(Fraction(0))
    if not ok:
        logger.error(f"L(p_{m} p_{n}) = {float(result.value):.3e} 超出上界 {float(result.bound):.3e}")
    return ok
