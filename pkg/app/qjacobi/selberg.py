# app/qjacobi/selberg.py
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from app.config import LOG_FORMAT, LOG_LEVEL, SELBERG_TERMS, SELBERG_TOLERANCE
from app.exactmath.multipoly import MultiPoly, vandermonde
from app.exactmath.rational import RationalLike, format_rational, parse_rational
from app.partitions.partition import Partition
from app.qjacobi.functional import FunctionalValue, functional_weights, ratio_bound, tail_bound
from app.qjacobi.multivariate import moment_closed, schur_poly
from app.qjacobi.params import SpecParams
from app.utils.parallel import ordered_map

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelbergResult:
    lhs: Fraction
    rhs: Fraction
    bound: Fraction
    terms: int

    @property
    def ok(self) -> bool:
        return abs(self.lhs - self.rhs) <= self.bound

    def to_json(self) -> Dict[str, Any]:
        return {
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "bound": format_rational(self.bound),
            "difference": format_rational(abs(self.lhs - self.rhs)),
            "terms": self.terms,
            "ok": self.ok,
        }


def functional_multivariate(f: MultiPoly, params: SpecParams, terms: int = SELBERG_TERMS) -> FunctionalValue:
    """
    n 重q积分在 k_i < K 的盒子上的部分和

    代入 x_i = q^{k_i} 后每个坐标的权重为 w_k = (bq)_k/(q)_k (aq)^k，
    于是 Σ_k f(q^k) ∏ w_{k_i} 按单项式分解为一元截断矩 m(e) = Σ_{k<K} w_k q^{ke} 的乘积。
    误差上界 F·(G^n - S^n)：F 为系数绝对值之和，S = Σ_{k<K}|w_k|，G = S + 尾项上界。

    Args:
        f: n 元多项式
        params: 有理参数
        terms: 每个坐标的项数 K
    """
    n = f.nvars
    terms_of_f = f.terms()
    if not terms_of_f:
        return FunctionalValue(Fraction(0), Fraction(0))
    weights = functional_weights(params, terms)
    q = params.q
    exponents = sorted({e for monomial in terms_of_f for e in monomial})

    def truncated_moment(e: int) -> Fraction:
        step = q ** e
        power = Fraction(1)
        total = Fraction(0)
        for w in weights:
            total += w * power
            power *= step
        return total

    moments = dict(zip(exponents, ordered_map(truncated_moment, exponents)))
    value = Fraction(0)
    for monomial in sorted(terms_of_f):
        term = terms_of_f[monomial]
        for e in monomial:
            term *= moments[e]
        value += term
    partial = sum((abs(w) for w in weights), Fraction(0))
    whole = partial + tail_bound(params, terms)
    return FunctionalValue(value, f.abs_coefficient_sum() * (whole ** n - partial ** n))


def selberg_check(lam: Partition, n: int, params: SpecParams, terms: int = SELBERG_TERMS,
                  tol: Optional[RationalLike] = None) -> SelbergResult:
    """
    L(s_λ Δ²) / L(Δ²) 的部分和与矩的乘积公式比较

    Args:
        lam: 分拆，ℓ(λ) ≤ n
        n: 积分重数
        params: 有理参数，要求 |aq| < 1
        terms: 每个坐标的项数 K
        tol: 认证误差上限，上界超过它时报错
    """
    tolerance = parse_rational(SELBERG_TOLERANCE if tol is None else tol)
    rhs = moment_closed(lam, n, params)
    squared = vandermonde(n) ** 2
    top = functional_multivariate(schur_poly(lam, n) * squared, params, terms)
    unit = functional_multivariate(squared, params, terms)
    bound = ratio_bound(top.value, top.bound, unit.value, unit.bound)
    if bound > tolerance:
        raise ValueError(f"K={terms} 太小: 误差上界 {float(bound):.3e} 超过 {float(tolerance):.3e}")
    result = SelbergResult(top.value / unit.value, rhs, bound, terms)
    if not result.ok:
        logger.error(f"Selberg型积分与乘积公式不符: λ={lam}, n={n}, 差 {float(abs(result.lhs - rhs)):.3e}")
    return result
