# app/exactmath/determinant.py
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.laurent import LaurentPoly
from app.exactmath.multipoly import MultiPoly, poly_ring, to_fraction, to_qq
from app.exactmath.qseries import QSeries

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)

_RING_TYPES = (QSeries, LaurentPoly, Fraction, MultiPoly)


def _one_like(x: Any):
    if isinstance(x, QSeries):
        return QSeries.one(x.cap)
    if isinstance(x, LaurentPoly):
        return LaurentPoly.one()
    if isinstance(x, MultiPoly):
        return MultiPoly.one(x.nvars)
    return Fraction(1)


def _zero_like(x: Any):
    if isinstance(x, QSeries):
        return QSeries.zero(x.cap)
    if isinstance(x, LaurentPoly):
        return LaurentPoly.zero()
    if isinstance(x, MultiPoly):
        return MultiPoly.constant(0, x.nvars)
    return Fraction(0)


def _normalize(matrix: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """检查方阵、同一环、同一cap；整数统一提升为有理数"""
    rows = [list(r) for r in matrix]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("行列式输入不是方阵")
    kind = None
    for r in rows:
        for j, x in enumerate(r):
            if isinstance(x, int) and not isinstance(x, bool):
                x = r[j] = Fraction(x)
            if not isinstance(x, _RING_TYPES):
                raise TypeError(f"不支持的矩阵元素类型: {type(x).__name__}")
            if kind is None:
                kind = type(x)
            elif type(x) is not kind:
                raise TypeError(f"矩阵元素类型混杂: {kind.__name__} 与 {type(x).__name__}")
    if kind is QSeries:
        caps = {x.cap for r in rows for x in r}
        if len(caps) > 1:
            raise ValueError(f"矩阵元素的cap不一致: {sorted(caps)}")
    if kind is MultiPoly:
        sizes = {x.nvars for r in rows for x in r}
        if len(sizes) > 1:
            raise ValueError(f"矩阵元素的变量个数不一致: {sorted(sizes)}")
    return rows


def _laplace(rows: List[List[Any]]) -> Any:
    """按首行余子式展开，按列集合缓存子式"""
    n = len(rows)
    one = _one_like(rows[0][0])
    zero = _zero_like(rows[0][0])
    memo: Dict[int, Any] = {}

    def minor(r: int, mask: int) -> Any:
        # mask 为剩余可用列的位集合
        if r == n:
            return one
        if mask in memo:
            return memo[mask]
        total = zero
        sign = 1
        for c in range(n):
            if not mask >> c & 1:
                continue
            entry = rows[r][c]
            if entry:
                sub = minor(r + 1, mask & ~(1 << c))
                if sub:
                    term = entry * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return minor(0, (1 << n) - 1)


def _domain_det(rows: List[List[Any]]) -> Any:
    """有理数矩阵在 QQ 上、MultiPoly 矩阵在其多项式环上交给 sympy 的 DomainMatrix 求值"""
    n = len(rows)
    sample = rows[0][0]
    if isinstance(sample, MultiPoly):
        R, _ = poly_ring(sample.nvars)
        matrix = DomainMatrix([[x.element for x in r] for r in rows], (n, n), R.to_domain())
        return MultiPoly(sample.nvars, matrix.det())
    matrix = DomainMatrix([[to_qq(x) for x in r] for r in rows], (n, n), QQ)
    return to_fraction(matrix.det())


def det(matrix: Sequence[Sequence[Any]], one: Optional[Any] = None) -> Any:
    """
    精确行列式

    QSeries 与 LaurentPoly 没有对应的 sympy 定义域，使用带缓存的余子式展开；
    有理数与 MultiPoly 矩阵使用 DomainMatrix。

    Args:
        matrix: QSeries / LaurentPoly / 有理数 / MultiPoly 方阵
        one: 空矩阵时返回的单位元
    """
    rows = _normalize(matrix)
    n = len(rows)
    if n == 0:
        if one is None:
            raise ValueError("空矩阵需要显式给出单位元")
        return one
    if isinstance(rows[0][0], (QSeries, LaurentPoly)):
        return _laplace(rows)
    logger.debug(f"{n}阶行列式使用DomainMatrix")
    return _domain_det(rows)


def det_by_elimination(matrix: Sequence[Sequence[Any]]) -> Any:
    """强制使用 DomainMatrix 消元（仅限有理数与MultiPoly）"""
    rows = _normalize(matrix)
    if not rows:
        raise ValueError("空矩阵")
    if not isinstance(rows[0][0], (Fraction, MultiPoly)):
        raise TypeError("消元法只适用于有理数或多项式矩阵")
    return _domain_det(rows)


def det_by_cofactor(matrix: Sequence[Sequence[Any]]) -> Any:
    """强制使用余子式展开"""
    rows = _normalize(matrix)
    if not rows:
        raise ValueError("空矩阵")
    return _laplace(rows)
