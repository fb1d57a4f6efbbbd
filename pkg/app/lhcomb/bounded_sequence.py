# app/lhcomb/bounded_sequence.py
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from app.exactmath.ratio import ratio_holds


class Variant(str, Enum):
    """四类截断讲堂集合"""

    L = "L"
    LBAR = "Lbar"
    AL = "AL"
    ALBAR = "ALbar"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        for v in cls:
            if v.value.lower() == text.strip().lower():
                return v
        raise ValueError(f"未知的集合类型: {text!r}")

    @property
    def is_bar(self) -> bool:
        """带横线的集合使用上取整统计且末项严格为正"""
        return self in (Variant.LBAR, Variant.ALBAR)

    @property
    def chain(self) -> str:
        """相邻比值之间的关系"""
        return ">" if self in (Variant.L, Variant.ALBAR) else ">="

    @property
    def plus(self) -> "Variant":
        return {Variant.L: Variant.LBAR, Variant.AL: Variant.ALBAR}[self]

    @property
    def minus(self) -> "Variant":
        return {Variant.LBAR: Variant.L, Variant.ALBAR: Variant.AL}[self]


def denominators(variant: Variant, n: int, k: int) -> Tuple[int, ...]:
    """L 系：(n, n-1, ..., n-k+1)；AL 系：(n-k+1, ..., n)"""
    if not 0 <= k <= n:
        raise ValueError(f"需要 0 ≤ k ≤ n: n={n}, k={k}")
    if variant in (Variant.L, Variant.LBAR):
        return tuple(range(n, n - k, -1))
    return tuple(range(n - k + 1, n + 1))


def _floor_or_ceil(a: int, s: int, bar: bool) -> int:
    return -((-a) // s) if bar else a // s


@dataclass(frozen=True)
class BoundedSequence:
    """
    截断讲堂分拆 / 反讲堂组合

    entries 按比值链 a_1/s_1 ≺ a_2/s_2 ≺ ... 满足集合的不等式。
    """

    variant: Variant
    n: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def denominators(self) -> Tuple[int, ...]:
        return denominators(self.variant, self.n, self.k)

    @property
    def size(self) -> int:
        return sum(self.entries)

    def rounded(self) -> Tuple[int, ...]:
        """⌊·⌋_S（普通集合）或 ⌈·⌉_S（带横线集合）"""
        bar = self.variant.is_bar
        return tuple(_floor_or_ceil(a, s, bar) for a, s in zip(self.entries, self.denominators))

    def statistics(self) -> Tuple[int, int, int]:
        """(q指数, u指数, v指数) = (|·|, |取整|, 取整后奇数个数)"""
        r = self.rounded()
        return self.size, sum(r), sum(1 for x in r if x % 2)

    def is_valid(self) -> bool:
        return validate_sequence(self)

    def to_json(self):
        return {"variant": self.variant.value, "n": self.n, "k": self.k, "entries": list(self.entries)}


def validate_sequence(seq: BoundedSequence) -> bool:
    """逐项交叉相乘检查比值链与末项条件"""
    if not 0 <= seq.k <= seq.n:
        return False
    if any(a < 0 for a in seq.entries):
        return False
    if seq.k == 0:
        return True
    dens = seq.denominators
    rel = seq.variant.chain
    for i in range(seq.k - 1):
        if not ratio_holds(seq.entries[i], dens[i], rel, seq.entries[i + 1], dens[i + 1]):
            return False
    last = seq.entries[-1]
    return last > 0 if seq.variant.is_bar else last >= 0


def plus_map(seq: BoundedSequence) -> BoundedSequence:
    """λ -> λ⁺：每项加1，L -> L̄，AL -> AL̄"""
    if seq.variant not in (Variant.L, Variant.AL):
        raise ValueError(f"plus_map 只接受 L 或 AL: {seq.variant.value}")
    if not validate_sequence(seq):
        raise ValueError(f"输入序列不满足比值链: {seq.entries}")
    return BoundedSequence(seq.variant.plus, seq.n, tuple(a + 1 for a in seq.entries))


def minus_map(seq: BoundedSequence) -> BoundedSequence:
    """plus_map 的逆"""
    if seq.variant not in (Variant.LBAR, Variant.ALBAR):
        raise ValueError(f"minus_map 只接受 Lbar 或 ALbar: {seq.variant.value}")
    if not validate_sequence(seq):
        raise ValueError(f"输入序列不满足比值链: {seq.entries}")
    return BoundedSequence(seq.variant.minus, seq.n, tuple(a - 1 for a in seq.entries))
