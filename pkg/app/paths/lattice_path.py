# app/paths/lattice_path.py
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from app.exactmath.laurent import LaurentPoly
from app.lhcomb.bounded_sequence import BoundedSequence, Variant, validate_sequence

# 高度 = (值, 等级)；等级0表示严格格子中的平移顶点 j/i - 1/i²，等级1为普通顶点
# 同一列内按字典序比较与真实高度一致
Height = Tuple[Any, int]
SHIFTED = 0
PLAIN = 1
INFINITY: Height = (math.inf, PLAIN)


class PathKind(str, Enum):
    NW = "NW"  # 讲堂格子中的北/西步
    NE = "NE"  # 严格讲堂格子中的北/东北步

    @classmethod
    def parse(cls, text: str) -> "PathKind":
        try:
            return cls(text.upper())
        except ValueError as e:
            raise ValueError(f"未知的路径类型: {text!r}") from e


@dataclass(frozen=True)
class Step:
    """
    一个西步或东北步

    NW: 从 (column, height) 走到 (column-1, height)
    NE: 从 (column-1, height - 1/column²) 走到 (column, height)
    """

    column: int
    height: Fraction

    @property
    def value(self) -> int:
        """步下方的区域数 column·height，对应序列中的元素"""
        return int(self.column * self.height)

    @property
    def floor(self) -> int:
        return math.floor(self.height)


@dataclass(frozen=True)
class LatticePath:
    """
    到 (end, ∞) 的路径，只记录有限个非北步

    steps 按序列下标排列：NW 路径自左向右（第i个最左的西步），
    NE 路径自右向左（第i个最右的东北步）。
    """

    kind: PathKind
    start: int
    end: int
    steps: Tuple[Step, ...]

    def __post_init__(self):
        if min(self.start, self.end) < 0:
            raise ValueError(f"列号必须非负: {self.start}->{self.end}")
        width = abs(self.start - self.end)
        if len(self.steps) != width:
            raise ValueError(f"步数 {len(self.steps)} 与起止列 {self.start}->{self.end} 不符")
        if self.kind is PathKind.NW and self.end > self.start:
            raise ValueError("NW 路径必须向西")
        if self.kind is PathKind.NE and self.end < self.start:
            raise ValueError("NE 路径必须向东")
        for k, step in enumerate(self.steps, start=1):
            if step.column != self._column(k):
                raise ValueError(f"第{k}步应在第{self._column(k)}列: {step.column}")
            if step.height < 0:
                raise ValueError(f"高度必须非负: {step.height}")
            if (step.column * step.height).denominator != 1:
                raise ValueError(f"高度 {step.height} 不是第{step.column}列的格点")

    def _column(self, k: int) -> int:
        if self.kind is PathKind.NW:
            return self.end + k
        return self.end - k + 1

    def is_monotone(self) -> bool:
        """NW: 高度随下标不增；NE: 高度随下标严格减"""
        heights = [s.height for s in self.steps]
        if self.kind is PathKind.NW:
            return all(a >= b for a, b in zip(heights, heights[1:]))
        return all(a > b for a, b in zip(heights, heights[1:]))

    def column_intervals(self) -> Dict[int, Tuple[Height, Height]]:
        """每一列中路径占据的闭区间 [下端, 上端]"""
        intervals: Dict[int, Tuple[Height, Height]] = {}
        if self.kind is PathKind.NW:
            low: Height = (Fraction(0), PLAIN)
            # 自右向左：第 start 列到第 end+1 列
            for k in range(len(self.steps), 0, -1):
                h = (self.steps[k - 1].height, PLAIN)
                intervals[self.steps[k - 1].column] = (low, h)
                low = h
            intervals[self.end] = (low, INFINITY)
            return intervals
        low = (Fraction(0), SHIFTED)
        column = self.start
        # 自左向右：离开第 c-1 列时在平移顶点，到达第 c 列时在普通顶点
        for k in range(len(self.steps), 0, -1):
            h = self.steps[k - 1].height
            intervals[column] = (low, (h, SHIFTED))
            column = self.steps[k - 1].column
            low = (h, PLAIN)
        intervals[column] = (low, INFINITY)
        return intervals

    def vertices(self) -> List[Tuple[int, Optional[Fraction]]]:
        """途经的转折顶点 (列, 真实高度)，终点高度为 None 表示 ∞"""
        points: List[Tuple[int, Optional[Fraction]]] = []
        if self.kind is PathKind.NW:
            points.append((self.start, Fraction(0)))
            for k in range(len(self.steps), 0, -1):
                step = self.steps[k - 1]
                points.append((step.column, step.height))
                points.append((step.column - 1, step.height))
        else:
            points.append((self.start, Fraction(-1, (self.start + 1) ** 2)))
            for k in range(len(self.steps), 0, -1):
                step = self.steps[k - 1]
                points.append((step.column - 1, step.height - Fraction(1, step.column ** 2)))
                points.append((step.column, step.height))
        points.append((self.end, None))
        return points

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "start": self.start,
            "end": self.end,
            "steps": [{"column": s.column, "height": f"{s.height.numerator}/{s.height.denominator}"}
                      for s in self.steps],
        }


def path_weight(path: LatticePath) -> Tuple[int, LaurentPoly]:
    """主特殊化下的权重 (q指数, u^{Σ⌊b⌋} v^{奇数个数})"""
    q_exp = 0
    u_exp = 0
    odd = 0
    for step in path.steps:
        q_exp += step.value
        u_exp += step.floor
        odd += step.floor % 2
    return q_exp, LaurentPoly.monomial(u_exp, odd)


def path_from_sequence(seq: BoundedSequence) -> LatticePath:
    """
    AL_{n,k} -> NW((n,0), (n-k,∞))，L_{n,k} -> NE((n-k, -1/(n-k+1)²), (n,∞))

    第i个元素落在第 i 个分母对应的列，高度为 元素/分母。
    """
    if seq.variant not in (Variant.AL, Variant.L):
        raise ValueError(f"只有 AL 与 L 序列对应格路: {seq.variant.value}")
    if not validate_sequence(seq):
        raise ValueError(f"序列不满足比值链: {seq.entries}")
    n, k = seq.n, seq.k
    steps = tuple(Step(d, Fraction(a, d)) for a, d in zip(seq.entries, seq.denominators))
    if seq.variant is Variant.AL:
        return LatticePath(PathKind.NW, n, n - k, steps)
    return LatticePath(PathKind.NE, n - k, n, steps)


def sequence_from_path(path: LatticePath) -> BoundedSequence:
    """path_from_sequence 的逆"""
    entries = tuple(step.value for step in path.steps)
    if path.kind is PathKind.NW:
        return BoundedSequence(Variant.AL, path.start, entries)
    return BoundedSequence(Variant.L, path.end, entries)


def intervals_overlap(first: Tuple[Height, Height], second: Tuple[Height, Height]) -> bool:
    # 端点都是格点，闭区间相交即共享顶点
    return max(first[0], second[0]) <= min(first[1], second[1])
