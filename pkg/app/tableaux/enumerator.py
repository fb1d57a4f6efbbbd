# app/tableaux/enumerator.py
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.laurent import LaurentPoly
from app.exactmath.qseries import QSeries
from app.exactmath.ratio import bound_left
from app.partitions.partition import SkewShape
from app.tableaux.tableau import PLUS_TYPES, OrderType, Tableau, tableau_minus, tableau_plus, validate, weight
from app.utils.parallel import ordered_map

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)

Counts = Dict[Tuple[int, int, int], int]


class TableauEnumerator:
    """
    讲堂表的深度优先枚举

    按逆阅读顺序（自下而上、每行自右向左）填数，每个新格子的右邻与下邻
    都已确定，比值约束化为整数区间；部分和超过 cap 即剪枝。
    """

    def __init__(self, shape: SkewShape, order_type: OrderType, cap: int):
        """
        Args:
            shape: 斜形状
            order_type: 类型 (n, ≺1, ≺2)
            cap: 元素和上限
        """
        if len(shape.outer) > order_type.n:
            raise ValueError(f"n={order_type.n} 小于形状行数 {len(shape.outer)}")
        if cap < 0:
            raise ValueError(f"cap必须非负: {cap}")
        self.shape = shape
        self.type = order_type
        self.cap = cap
        self.low = 1 if order_type.is_bar else 0
        self.cells = sorted(shape.cells(), key=lambda c: (-c[0], -c[1]))
        index = {c: k for k, c in enumerate(self.cells)}
        self.dens = [order_type.denominator(i, j) for i, j in self.cells]
        # (邻居下标, 邻居分母, 关系)
        self.links: List[List[Tuple[int, int, str]]] = []
        for i, j in self.cells:
            links = []
            if (i, j + 1) in index:
                k = index[(i, j + 1)]
                links.append((k, self.dens[k], order_type.row))
            if (i + 1, j) in index:
                k = index[(i + 1, j)]
                links.append((k, self.dens[k], order_type.col))
            self.links.append(links)

    def _interval(self, pos: int, values: List[int], budget: int) -> Tuple[int, int]:
        lo, hi = self.low, budget
        d = self.dens[pos]
        for k, t, rel in self.links[pos]:
            b_lo, b_hi = bound_left(rel, d, values[k], t)
            if b_lo is not None and b_lo > lo:
                lo = b_lo
            if b_hi is not None and b_hi < hi:
                hi = b_hi
        return lo, hi

    def _walk(self, values: List[int], pos: int, budget: int) -> Iterator[List[int]]:
        if pos == len(self.cells):
            yield values
            return
        lo, hi = self._interval(pos, values, budget)
        for a in range(lo, hi + 1):
            values[pos] = a
            yield from self._walk(values, pos + 1, budget - a)
        values[pos] = 0

    def first_values(self) -> List[int]:
        """第一个格子（最下一行最右格）的可能取值"""
        if not self.cells:
            return []
        return list(range(self.low, self.cap + 1))

    def iter_values(self, first: Optional[int] = None) -> Iterator[List[int]]:
        """逐个产生元素向量（按 self.cells 顺序，返回的列表会被复用）"""
        values = [0] * len(self.cells)
        if first is None:
            yield from self._walk(values, 0, self.cap)
            return
        values[0] = first
        yield from self._walk(values, 1, self.cap - first)

    def _statistics(self, values: List[int]) -> Tuple[int, int, int]:
        bar = self.type.is_bar
        u_exp = odd = total = 0
        for a, d in zip(values, self.dens):
            r = -((-a) // d) if bar else a // d
            u_exp += r
            odd += r & 1
            total += a
        return total, u_exp, odd

    def counts(self, first: Optional[int] = None) -> Counts:
        out: Counts = {}
        for values in self.iter_values(first):
            key = self._statistics(values)
            out[key] = out.get(key, 0) + 1
        return out

    def to_tableau(self, values: List[int]) -> Tableau:
        return Tableau(self.shape, dict(zip(self.cells, values)), self.type)


def _merge(parts: List[Counts]) -> Counts:
    merged: Counts = {}
    for part in parts:
        for key, c in part.items():
            merged[key] = merged.get(key, 0) + c
    return merged


def tableau_counts(shape: SkewShape, order_type: OrderType, cap: int) -> Counts:
    """按 (q, u, v) 指数统计，子树并行后按固定顺序合并"""
    enumerator = TableauEnumerator(shape, order_type, cap)
    if not enumerator.cells:
        return {(0, 0, 0): 1}
    parts = ordered_map(enumerator.counts, enumerator.first_values())
    return _merge(parts)


def ls_series(shape: SkewShape, order_type: OrderType, cap: int) -> QSeries:
    """
    讲堂Schur级数：所有元素和 ≤ cap 的合法表的权重之和

    Args:
        shape: 斜形状
        order_type: 类型，带横线类型自动使用上取整权重
        cap: 截断次数
    """
    series = QSeries.from_counts(tableau_counts(shape, order_type, cap), cap)
    logger.debug(f"LS {shape} 类型 {order_type.name} n={order_type.n} 至 q^{cap} 完成")
    return series


def iter_tableaux(shape: SkewShape, order_type: OrderType, cap: int) -> Iterator[Tableau]:
    enumerator = TableauEnumerator(shape, order_type, cap)
    for values in enumerator.iter_values():
        yield enumerator.to_tableau(values)


def list_tableaux(shape: SkewShape, order_type: OrderType, cap: int) -> List[Tableau]:
    """全部合法表，按行优先元素元组排序"""
    return sorted(iter_tableaux(shape, order_type, cap), key=lambda t: t.key())


def count_tableaux(shape: SkewShape, order_type: OrderType, cap: int) -> int:
    return sum(tableau_counts(shape, order_type, cap).values())


def tableau_plus_check(shape: SkewShape, order_type: OrderType, cap: int) -> bool:
    """
    T -> T⁺ 是 (≥,>) -> (>,≥)（或 (<,≤) -> (≤,<)）的双射，且逐表满足
    上取整权重(T⁺) = (uvq)^{|格子|} · 下取整权重(T)|_{v -> 1/v}

    Args:
        shape: 斜形状
        order_type: ge-gt 或 lt-le 类型
        cap: 元素和上限
    """
    if (order_type.row, order_type.col) not in PLUS_TYPES:
        raise ValueError(f"T⁺ 只定义在 ge-gt 与 lt-le 类型上: {order_type.name}")
    cells = len(shape.cells())
    images = []
    for t in iter_tableaux(shape, order_type, cap):
        image = tableau_plus(t)
        if not validate(image) or tableau_minus(image) != t:
            logger.error(f"T⁺ 非法或不可逆: {t.rows()}")
            return False
        d, floor_part = weight(t, bar=False)
        expected = (d + cells, floor_part.invert_v() * LaurentPoly.monomial(cells, cells))
        if weight(image, bar=True) != expected:
            logger.error(f"T⁺ 的权重关系不成立: {t.rows()}")
            return False
        images.append(image.key())
    target_type = OrderType(*PLUS_TYPES[(order_type.row, order_type.col)], order_type.n)
    targets = [t.key() for t in list_tableaux(shape, target_type, cap + cells)]
    ok = sorted(images) == targets
    if not ok:
        logger.error(f"T⁺ 在 {shape} 上不是满射 (cap={cap})")
    return ok
