# app/tableaux/jacobi_trudi.py
from typing import Callable, List

from app.exactmath.determinant import det
from app.exactmath.qseries import QSeries
from app.lhcomb.lh_functions import e_series, ebar_series, h_series, hbar_series
from app.partitions.partition import SkewShape, conjugate
from app.tableaux.tableau import OrderType

SeriesFamily = Callable[[int, int, int], QSeries]


def _entry(family: SeriesFamily, upper: int, lower: int, cap: int) -> QSeries:
    # 下标为负时为0，为0时为1
    if lower < 0:
        return QSeries.zero(cap)
    if lower == 0:
        return QSeries.one(cap)
    return family(upper, lower, cap)


def _determinant(matrix: List[List[QSeries]], cap: int) -> QSeries:
    return det(matrix, one=QSeries.one(cap))


def _families(order_type: OrderType):
    """返回 (h族, e族)，带横线类型使用 h̄/ē"""
    if order_type.is_bar:
        return hbar_series, ebar_series
    return h_series, e_series


def jacobi_trudi_h(shape: SkewShape, order_type: OrderType, cap: int) -> QSeries:
    """
    h 形式的行列式

    (≥,>) 与 (>,≥): det(h^{(n-j+1+μ_j)}_{λ_i-μ_j-i+j})，阶数 ℓ(λ)
    (<,≤) 与 (≤,<): det(h^{(n+i-λ'_i)}_{λ'_i-μ'_j-i+j})，阶数 ℓ(λ')
    """
    n = order_type.n
    _check(shape, order_type)
    h, _ = _families(order_type)
    lam, mu = shape.outer, shape.inner
    if order_type.row in (">=", ">"):
        size = len(lam)
        matrix = [[_entry(h, n - j + 1 + mu[j], lam[i] - mu[j] - i + j, cap)
                   for j in range(1, size + 1)] for i in range(1, size + 1)]
    else:
        lc, mc = conjugate(lam), conjugate(mu)
        size = len(lc)
        matrix = [[_entry(h, n + i - lc[i], lc[i] - mc[j] - i + j, cap)
                   for j in range(1, size + 1)] for i in range(1, size + 1)]
    return _determinant(matrix, cap)


def jacobi_trudi_e(shape: SkewShape, order_type: OrderType, cap: int) -> QSeries:
    """
    e 形式的行列式

    (≥,>) 与 (>,≥): det(e^{(n+j-1-μ'_j)}_{λ'_i-μ'_j-i+j})，阶数 ℓ(λ')
    (<,≤) 与 (≤,<): det(e^{(n-i+λ_i)}_{λ_i-μ_j-i+j})，阶数 ℓ(λ)
    """
    n = order_type.n
    _check(shape, order_type)
    _, e = _families(order_type)
    lam, mu = shape.outer, shape.inner
    if order_type.row in (">=", ">"):
        lc, mc = conjugate(lam), conjugate(mu)
        size = len(lc)
        matrix = [[_entry(e, n + j - 1 - mc[j], lc[i] - mc[j] - i + j, cap)
                   for j in range(1, size + 1)] for i in range(1, size + 1)]
    else:
        size = len(lam)
        matrix = [[_entry(e, n - i + lam[i], lam[i] - mu[j] - i + j, cap)
                   for j in range(1, size + 1)] for i in range(1, size + 1)]
    return _determinant(matrix, cap)


def _check(shape: SkewShape, order_type: OrderType) -> None:
    if len(shape.outer) > order_type.n:
        raise ValueError(f"需要 ℓ(λ) ≤ n: ℓ={len(shape.outer)}, n={order_type.n}")
    if order_type.name not in ("ge-gt", "lt-le", "gt-ge", "le-lt"):
        raise ValueError(f"行列式公式只适用于四种命名类型: {order_type.name}")


def jacobi_trudi(shape: SkewShape, order_type: OrderType, cap: int, form: str = "h") -> QSeries:
    """按 form ("h" 或 "e") 计算行列式"""
    if form == "h":
        return jacobi_trudi_h(shape, order_type, cap)
    if form == "e":
        return jacobi_trudi_e(shape, order_type, cap)
    raise ValueError(f"未知的行列式形式: {form!r}")
