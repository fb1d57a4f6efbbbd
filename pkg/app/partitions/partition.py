# app/partitions/partition.py
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """
    整数分拆，存储为弱递减的正整数序列（不含末尾零）

    下标从1开始；超出长度的部分视为0。
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"分拆的部分必须非负: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"分拆必须弱递减: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __getitem__(self, i: int) -> int:
        """λ_i（i从1开始），越界为0"""
        if i < 1:
            raise IndexError(f"分拆下标从1开始: {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, n: int) -> Tuple[int, ...]:
        """补零到长度 n"""
        if len(self.parts) > n:
            raise ValueError(f"分拆 {self} 的长度超过 {n}")
        return self.parts + (0,) * (n - len(self.parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) or "∅"


def parse_partition(text: Optional[str]) -> Partition:
    """解析命令行写法 "6,6,4,3"；空串或 "0" 为空分拆"""
    if text is None:
        return Partition()
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as e:
        raise ValueError(f"无法解析分拆: {text!r}") from e
    if any(p <= 0 for p in parts):
        raise ValueError(f"分拆的部分必须为正: {text!r}")
    return Partition(parts)


def conjugate(lam: Partition) -> Partition:
    """共轭分拆：各列长度"""
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def n_stat(lam: Partition) -> int:
    """n(λ) = Σ (i-1) λ_i"""
    return sum(i * p for i, p in enumerate(lam.parts))


def content(i: int, j: int) -> int:
    return j - i


def contains(lam: Partition, mu: Partition) -> bool:
    """μ ⊆ λ"""
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(1, len(mu) + 1))


def hook_length(lam: Partition, i: int, j: int) -> int:
    lam_conj = conjugate(lam)
    return lam[i] - j + lam_conj[j] - i + 1


def partitions_of(m: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> List[Partition]:
    """m 的全部分拆，按字典序降序"""
    result: List[Partition] = []
    limit_parts = m if max_parts is None else max_parts
    first = m if max_part is None else min(m, max_part)

    def extend(remaining: int, bound: int, prefix: List[int]) -> None:
        if remaining == 0:
            result.append(Partition(tuple(prefix)))
            return
        if len(prefix) == limit_parts:
            return
        for p in range(min(bound, remaining), 0, -1):
            prefix.append(p)
            extend(remaining - p, p, prefix)
            prefix.pop()

    extend(m, first, [])
    return result


def partitions_up_to(total: int, max_parts: Optional[int] = None) -> List[Partition]:
    """所有 |λ| ≤ total 的分拆，按大小再按字典序"""
    out: List[Partition] = []
    for m in range(total + 1):
        out.extend(partitions_of(m, max_parts))
    return out


def subpartitions(lam: Partition, max_parts: Optional[int] = None) -> List[Partition]:
    """所有 μ ⊆ λ（可限制长度）"""
    limit = len(lam) if max_parts is None else min(len(lam), max_parts)
    out: List[Partition] = []

    def extend(i: int, bound: int, prefix: List[int]) -> None:
        out.append(Partition(tuple(prefix)))
        if i > limit:
            return
        for p in range(1, min(bound, lam[i]) + 1):
            prefix.append(p)
            extend(i + 1, p, prefix)
            prefix.pop()

    extend(1, lam[1], [])
    return sorted(out, key=lambda p: (p.size, p.parts))


@dataclass(frozen=True)
class SkewShape:
    """斜形状 λ/μ，要求 μ ⊆ λ"""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ValueError(f"内形状 {self.inner} 不包含于外形状 {self.outer}")

    @classmethod
    def parse(cls, outer: str, inner: Optional[str] = None) -> "SkewShape":
        return cls(parse_partition(outer), parse_partition(inner))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def rows(self) -> int:
        return len(self.outer)

    def row_cells(self, i: int) -> range:
        """第 i 行的列下标范围"""
        return range(self.inner[i] + 1, self.outer[i] + 1)

    def cells(self) -> List[Cell]:
        """按行优先顺序列出格子"""
        return [(i, j) for i in range(1, len(self.outer) + 1) for j in self.row_cells(i)]

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return i >= 1 and j >= 1 and self.inner[i] < j <= self.outer[i]

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def is_straight(self) -> bool:
        return not self.inner.parts

    def __str__(self) -> str:
        if self.inner.parts:
            return f"({self.outer})/({self.inner})"
        return f"({self.outer})"


def cells(shape: SkewShape) -> List[Cell]:
    return shape.cells()


def all_skew_shapes(max_size: int, max_rows: int) -> List[SkewShape]:
    """外形状 |λ| ≤ max_size、长度 ≤ max_rows 的全部非空斜形状"""
    shapes: List[SkewShape] = []
    for lam in partitions_up_to(max_size, max_rows):
        for mu in subpartitions(lam):
            if mu != lam:
                shapes.append(SkewShape(lam, mu))
    return shapes
