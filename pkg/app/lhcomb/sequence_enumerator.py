# app/lhcomb/sequence_enumerator.py
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.qseries import QSeries
from app.exactmath.ratio import bound_right
from app.lhcomb.bounded_sequence import BoundedSequence, Variant, denominators, minus_map, plus_map

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


def iter_set(variant: Variant, n: int, k: int, cap: int) -> Iterator[BoundedSequence]:
    """
    按字典序生成集合中 |entries| ≤ cap 的全部成员

    部分和超过 cap 时剪枝；相邻比值约束化为整数区间。

    Args:
        variant: 集合类型
        n: 参数 n
        k: 长度
        cap: 元素和上限
    """
    dens = denominators(variant, n, k)
    if k == 0:
        yield BoundedSequence(variant, n, ())
        return
    low = 1 if variant.is_bar else 0
    rel = variant.chain
    entries: List[int] = []

    def extend(pos: int, budget: int) -> Iterator[BoundedSequence]:
        hi = budget
        lo = low
        if pos > 0:
            b_lo, b_hi = bound_right(entries[-1], dens[pos - 1], rel, dens[pos])
            if b_lo is not None:
                lo = max(lo, b_lo)
            if b_hi is not None:
                hi = min(hi, b_hi)
        for a in range(lo, hi + 1):
            entries.append(a)
            if pos == k - 1:
                yield BoundedSequence(variant, n, tuple(entries))
            else:
                yield from extend(pos + 1, budget - a)
            entries.pop()

    yield from extend(0, cap)


def enum_set(variant: Variant, n: int, k: int, cap: int) -> List[BoundedSequence]:
    """集合中 |entries| ≤ cap 的全部成员（规范排序）"""
    return sorted(iter_set(variant, n, k, cap), key=lambda s: s.entries)


def statistics_counts(variant: Variant, n: int, k: int, cap: int) -> Dict[Tuple[int, int, int], int]:
    counts: Dict[Tuple[int, int, int], int] = {}
    for seq in iter_set(variant, n, k, cap):
        key = seq.statistics()
        counts[key] = counts.get(key, 0) + 1
    return counts


@lru_cache(maxsize=4096)
def genfun_enum(variant: Variant, n: int, k: int, cap: int) -> QSeries:
    """Σ u^{|取整|} v^{o(取整)} q^{|·|}，由枚举得到"""
    series = QSeries.from_counts(statistics_counts(variant, n, k, cap), cap)
    logger.debug(f"枚举 {variant.value}_{{{n},{k}}} 至 q^{cap} 完成")
    return series


def plus_map_check(variant: Variant, n: int, k: int, cap: int) -> bool:
    """
    λ -> λ⁺ 把元素和 ≤ cap 的成员一一映到带横线集合中元素和 ≤ cap+k 的成员

    Args:
        variant: L 或 AL
        n: 参数 n
        k: 长度
        cap: 元素和上限
    """
    sources = enum_set(variant, n, k, cap)
    images = [plus_map(seq) for seq in sources]
    if any(minus_map(image) != seq for image, seq in zip(images, sources)):
        logger.error(f"minus_map 不是 plus_map 的逆: {variant.value}_{{{n},{k}}}")
        return False
    targets = enum_set(variant.plus, n, k, cap + k)
    ok = sorted(image.entries for image in images) == [seq.entries for seq in targets]
    if not ok:
        logger.error(f"plus_map 在 {variant.value}_{{{n},{k}}} 上不是双射 (cap={cap})")
    return ok
