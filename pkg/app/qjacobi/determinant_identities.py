# app/qjacobi/determinant_identities.py
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.determinant import det
from app.exactmath.rational import format_rational, qpoch_value
from app.qjacobi.params import draw_rational, random_params

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeterminantPoint:
    """行列式恒等式的一个有理取值点"""

    q: Fraction
    a: Fraction
    b: Fraction
    xs: Tuple[Fraction, ...]

    def __str__(self) -> str:
        xs = ", ".join(format_rational(x) for x in self.xs)
        return f"q={format_rational(self.q)}, a={format_rational(self.a)}, b={format_rational(self.b)}, x=({xs})"


def _vandermonde(xs: Tuple[Fraction, ...]) -> Fraction:
    # ∏_{i<j} (x_j - x_i)
    result = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            result *= xs[j] - xs[i]
    return result


def _degenerate(point: DeterminantPoint) -> bool:
    n = len(point.xs)
    q, a, b = point.q, point.a, point.b
    if len(set(point.xs)) < n or 0 in point.xs:
        return True
    for x in point.xs:
        factors = (
            qpoch_value(a * x, q, n),
            qpoch_value(b / x, q, n),
            qpoch_value(q ** (1 - n) * x / b, q, n),
            qpoch_value(b * x, q, n),
        )
        if 0 in factors:
            return True
    return False


def random_point(rng: random.Random, n: int, max_den: int = 12) -> DeterminantPoint:
    """随机有理点：x_i 互异非零，所有 Pochhammer 因子非零（拒绝采样）"""
    while True:
        params = random_params(rng, max_den)
        xs = tuple(draw_rational(rng, -2, 2, max_den) for _ in range(n))
        point = DeterminantPoint(params.q, params.a, params.b, xs)
        if not _degenerate(point):
            return point


def lemma_sides(point: DeterminantPoint) -> Tuple[Fraction, Fraction]:
    """
    det(1 / ((ax_j)_i (b/x_j)_i)) 与其乘积形式

    (-1)^{C(n+1,2)} b^{-n²} q^{-C(n+1,3)} x_1⋯x_n ∏_{i<j} (b - a x_i x_j)(x_j - x_i)
    / ∏_j (ax_j)_n (q^{1-n} b^{-1} x_j)_n
    """
    q, a, b, xs = point.q, point.a, point.b, point.xs
    n = len(xs)
    lhs = det([[1 / (qpoch_value(a * x, q, i) * qpoch_value(b / x, q, i)) for x in xs] for i in range(1, n + 1)])
    rhs = Fraction((-1) ** ((n + 1) * n // 2)) * b ** (-n * n) * q ** (-((n + 1) * n * (n - 1) // 6))
    for i, x in enumerate(xs):
        rhs *= x / (qpoch_value(a * x, q, n) * qpoch_value(q ** (1 - n) * x / b, q, n))
        for y in xs[i + 1:]:
            rhs *= b - a * x * y
    return lhs, rhs * _vandermonde(xs)


def lemma_polynomial_sides(point: DeterminantPoint) -> List[Tuple[Fraction, Fraction]]:
    """两个等价形式：多项式行列式与其除以 ∏(ax_j)_n(bx_j)_n 的有理形式"""
    q, a, b, xs = point.q, point.a, point.b, point.xs
    n = len(xs)
    closed = _vandermonde(xs)
    for i in range(n):
        for j in range(i + 1, n):
            closed *= 1 - a * b * q ** (n - 1) * xs[i] * xs[j]
    polynomial = det([[x ** (i - 1) * qpoch_value(a * q ** i * x, q, n - i) * qpoch_value(b * x, q, n - i) for x in xs]
                      for i in range(1, n + 1)])
    rational = det([[x ** (i - 1) / (qpoch_value(a * x, q, i) * qpoch_value(q ** (n - i) * b * x, q, i)) for x in xs]
                    for i in range(1, n + 1)])
    denominator = Fraction(1)
    for x in xs:
        denominator *= qpoch_value(a * x, q, n) * qpoch_value(b * x, q, n)
    return [(polynomial, closed), (rational, closed / denominator)]


def proposition_sides(point: DeterminantPoint) -> List[Tuple[Fraction, Fraction]]:
    """
    det(x_j^i (b/x_j)_i / (ax_j)_i) = ∏_i (abq^i)_{i-1} (x_i - b) / (ax_i)_n · ∏_{i<j} (x_j - x_i)

    以及乘以 ∏(ax_j)_n 后的多项式形式 det(x_j^i (b/x_j)_i (aq^i x_j)_{n-i})。
    """
    q, a, b, xs = point.q, point.a, point.b, point.xs
    n = len(xs)
    numerator = _vandermonde(xs)
    denominator = Fraction(1)
    for i, x in enumerate(xs, start=1):
        numerator *= qpoch_value(a * b * q ** i, q, i - 1) * (x - b)
        denominator *= qpoch_value(a * x, q, n)
    rational = det([[x ** i * qpoch_value(b / x, q, i) / qpoch_value(a * x, q, i) for x in xs] for i in range(1, n + 1)])
    polynomial = det([[x ** i * qpoch_value(b / x, q, i) * qpoch_value(a * q ** i * x, q, n - i) for x in xs]
                      for i in range(1, n + 1)])
    return [(rational, numerator / denominator), (polynomial, numerator)]


def _check(name: str, n: int, draws: int, seed: int,
           sides: Callable[[DeterminantPoint], List[Tuple[Fraction, Fraction]]]) -> bool:
    if n < 1:
        raise ValueError(f"阶数必须为正: {n}")
    rng = random.Random(seed)
    for _ in range(draws):
        point = random_point(rng, n)
        for lhs, rhs in sides(point):
            if lhs != rhs:
                logger.error(f"{name} 不成立: n={n}, {point}")
                return False
    return True


def det_lemma_check(n: int, draws: int = 20, seed: int = 0) -> bool:
    """
    在随机有理点上精确验证 1/((ax)_i(b/x)_i) 行列式及其多项式形式

    Args:
        n: 行列式阶数
        draws: 抽样次数
        seed: 随机种子
    """
    return _check("行列式引理", n, draws, seed, lambda p: [lemma_sides(p)] + lemma_polynomial_sides(p))


def det_prop_check(n: int, draws: int = 20, seed: int = 0) -> bool:
    """在随机有理点上精确验证 x^i (b/x)_i/(ax)_i 行列式及其多项式形式"""
    return _check("行列式求值", n, draws, seed, proposition_sides)
