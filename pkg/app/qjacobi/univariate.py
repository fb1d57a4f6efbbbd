# app/qjacobi/univariate.py
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.rings import ring

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.multipoly import to_fraction, to_qq
from app.exactmath.rational import format_rational, nonzero, qpoch_value
from app.qjacobi.params import SpecParams

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

_RING, _X = ring("x", QQ)


class UniPoly:
    """
    一元有理系数多项式

    底层使用 sympy 的 QQ[x] 多项式环，coeffs[k] 为 x^k 的系数，末尾无零。
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs: Sequence[Scalar] = (), element=None):
        if element is None:
            element = _RING.from_dict({(k,): to_qq(c) for k, c in enumerate(coeffs) if c})
        self._p = element

    @classmethod
    def x(cls) -> "UniPoly":
        return cls(element=_X)

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls(element=_RING.ground_new(to_qq(c)))

    @classmethod
    def monomial(cls, n: int) -> "UniPoly":
        """x^n"""
        if n < 0:
            raise ValueError(f"次数必须非负: {n}")
        return cls(element=_X ** n)

    @property
    def degree(self) -> int:
        """零多项式的次数记为 -1"""
        return self._p.degree() if self._p else -1

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(self.coefficient(k) for k in range(self.degree + 1))

    def coefficient(self, k: int) -> Fraction:
        return to_fraction(self._p.get((k,), QQ.zero))

    def is_monic(self) -> bool:
        return bool(self._p) and self._p.LC == QQ.one

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UniPoly.constant(other)
        raise TypeError(f"不能与 {type(other).__name__} 运算")

    def __add__(self, other):
        return UniPoly(element=self._p + self._lift(other)._p)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(element=-self._p)

    def __sub__(self, other):
        return UniPoly(element=self._p - self._lift(other)._p)

    def __rsub__(self, other):
        return UniPoly(element=self._lift(other)._p - self._p)

    def __mul__(self, other):
        return UniPoly(element=self._p * self._lift(other)._p)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self._p)

    def evaluate(self, x: Scalar) -> Fraction:
        return to_fraction(self._p.evaluate(_X, to_qq(x)))

    def abs_coefficient_sum(self) -> Fraction:
        return sum((abs(to_fraction(c)) for c in self._p.values()), Fraction(0))

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"UniPoly({self._p})"


@dataclass(frozen=True)
class RecurrenceCoefficients:
    A: Fraction
    C: Fraction
    b: Fraction  # b_n = A_n + C_n
    lam: Fraction  # λ_n = A_{n-1} C_n

    def to_json(self) -> Dict[str, Any]:
        return {k: format_rational(getattr(self, k)) for k in ("A", "C", "b", "lam")}


def _A(n: int, params: SpecParams) -> Fraction:
    q, a, ab = params.q, params.a, params.ab
    num = q ** n * (1 - a * q ** (n + 1)) * (1 - ab * q ** (n + 1))
    den = (1 - ab * q ** (2 * n + 1)) * (1 - ab * q ** (2 * n + 2))
    return num / nonzero(den, f"A_{n}")


def _C(n: int, params: SpecParams) -> Fraction:
    if n == 0:
        return Fraction(0)
    q, a, b, ab = params.q, params.a, params.b, params.ab
    num = a * q ** n * (1 - q ** n) * (1 - b * q ** n)
    den = (1 - ab * q ** (2 * n)) * (1 - ab * q ** (2 * n + 1))
    return num / nonzero(den, f"C_{n}")


def recurrence_coefficients(n: int, params: SpecParams) -> RecurrenceCoefficients:
    """
    三项递推系数

    A_n = q^n(1-aq^{n+1})(1-abq^{n+1}) / ((1-abq^{2n+1})(1-abq^{2n+2}))
    C_n = aq^n(1-q^n)(1-bq^n) / ((1-abq^{2n})(1-abq^{2n+1}))，C_0 = 0
    """
    if n < 0:
        raise ValueError(f"下标必须非负: {n}")
    A, C = _A(n, params), _C(n, params)
    lam = _A(n - 1, params) * C if n >= 1 else Fraction(0)
    return RecurrenceCoefficients(A, C, A + C, lam)


@lru_cache(maxsize=1024)
def _recurrence_family(n: int, params: SpecParams) -> Tuple[UniPoly, ...]:
    x = UniPoly.x()
    polys: List[UniPoly] = [UniPoly.constant(1)]
    previous = UniPoly()
    for m in range(n):
        rc = recurrence_coefficients(m, params)
        nxt = (x - rc.b) * polys[-1] - rc.lam * previous
        previous = polys[-1]
        polys.append(nxt)
    return tuple(polys)


def little_q_jacobi_recurrence(n: int, params: SpecParams) -> UniPoly:
    """p_{m+1} = (x - b_m) p_m - λ_m p_{m-1}"""
    if n < 0:
        raise ValueError(f"次数必须非负: {n}")
    return _recurrence_family(n, params)[n]


def little_q_jacobi_hypergeometric(n: int, params: SpecParams) -> UniPoly:
    """
    p_n = (aq)_n / ((-1)^n q^{-C(n,2)} (abq^{n+1})_n) · ₂φ₁(q^{-n}, abq^{n+1}; aq; q, qx)

    Args:
        n: 次数
        params: 有理参数
    """
    if n < 0:
        raise ValueError(f"次数必须非负: {n}")
    q, a, ab = params.q, params.a, params.ab
    prefactor = qpoch_value(a * q, q, n) * (-1) ** n * q ** (n * (n - 1) // 2)
    prefactor /= nonzero(qpoch_value(ab * q ** (n + 1), q, n), f"(abq^{n + 1})_{n}")
    coeffs = []
    for k in range(n + 1):
        num = qpoch_value(q ** -n, q, k) * qpoch_value(ab * q ** (n + 1), q, k)
        den = qpoch_value(q, q, k) * nonzero(qpoch_value(a * q, q, k), f"(aq)_{k}")
        coeffs.append(prefactor * num / den * q ** k)
    return UniPoly(tuple(coeffs))


def little_q_jacobi(n: int, params: SpecParams) -> UniPoly:
    """首一 little q-Jacobi 多项式；递推与超几何两种构造必须完全一致"""
    by_recurrence = little_q_jacobi_recurrence(n, params)
    by_series = little_q_jacobi_hypergeometric(n, params)
    if by_recurrence != by_series:
        logger.error(f"p_{n} 的两种构造不一致: {params.to_json()}")
        raise ArithmeticError(f"p_{n} 递推与超几何结果不一致")
    return by_recurrence


def polynomial_family(n_max: int, params: SpecParams) -> List[UniPoly]:
    """p_0, ..., p_{n_max}（递推构造）"""
    return list(_recurrence_family(n_max, params))
