# app/tableaux/tableau.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from app.exactmath.laurent import LaurentPoly
from app.exactmath.ratio import normalize_relation, ratio_holds
from app.partitions.partition import Cell, Partition, SkewShape, content

# 命令行类型名 -> (行关系, 列关系)
NAMED_TYPES = {
    "ge-gt": (">=", ">"),
    "lt-le": ("<", "<="),
    "gt-ge": (">", ">="),
    "le-lt": ("<=", "<"),
}
BAR_TYPES = {(">", ">="), ("<=", "<")}
PLUS_TYPES = {(">=", ">"): (">", ">="), ("<", "<="): ("<=", "<")}


@dataclass(frozen=True)
class OrderType:
    """讲堂表的类型 (n, ≺1, ≺2)：行关系、列关系与参数 n"""

    row: str
    col: str
    n: int

    def __post_init__(self):
        object.__setattr__(self, "row", normalize_relation(self.row))
        object.__setattr__(self, "col", normalize_relation(self.col))
        if self.n < 1:
            raise ValueError(f"n 必须为正: {self.n}")

    @classmethod
    def named(cls, name: str, n: int) -> "OrderType":
        try:
            row, col = NAMED_TYPES[name]
        except KeyError as e:
            raise ValueError(f"未知的表类型: {name!r}，可选 {sorted(NAMED_TYPES)}") from e
        return cls(row, col, n)

    @property
    def name(self) -> str:
        for key, pair in NAMED_TYPES.items():
            if pair == (self.row, self.col):
                return key
        return f"{self.row},{self.col}"

    @property
    def is_bar(self) -> bool:
        """(>,≥) 与 (≤,<) 使用上取整权重且元素为正"""
        return (self.row, self.col) in BAR_TYPES

    def with_n(self, n: int) -> "OrderType":
        return OrderType(self.row, self.col, n)

    def denominator(self, i: int, j: int) -> int:
        d = self.n + content(i, j)
        assert d >= 1, f"格子({i},{j})的分母 n+c = {d} 非正"
        return d


@dataclass(frozen=True)
class Tableau:
    """斜形状上的非负整数填充及其类型"""

    shape: SkewShape
    entries: Dict[Cell, int] = field(hash=False)
    type: OrderType

    def __post_init__(self):
        if len(self.shape.outer) > self.type.n:
            raise ValueError(f"n={self.type.n} 小于形状行数 {len(self.shape.outer)}")
        if set(self.entries) != set(self.shape.cells()):
            raise ValueError("填充的格子与形状不一致")

    def __getitem__(self, cell: Cell) -> int:
        return self.entries[cell]

    @property
    def size(self) -> int:
        return sum(self.entries.values())

    def key(self) -> Tuple[int, ...]:
        """行优先的元素元组，用作规范排序"""
        return tuple(self.entries[c] for c in self.shape.cells())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and self.type == other.type and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.type, self.key()))

    def rows(self) -> List[List[int]]:
        return [[self.entries[(i, j)] for j in self.shape.row_cells(i)]
                for i in range(1, len(self.shape.outer) + 1)]


def tableau_from_rows(shape: SkewShape, rows: List[List[int]], order_type: OrderType) -> Tableau:
    """按行给出元素（每行只含斜形状中的格子）"""
    if len(rows) != len(shape.outer):
        raise ValueError(f"行数应为 {len(shape.outer)}")
    entries: Dict[Cell, int] = {}
    for i, row in enumerate(rows, start=1):
        cols = list(shape.row_cells(i))
        if len(row) != len(cols):
            raise ValueError(f"第{i}行应有 {len(cols)} 个元素")
        for j, value in zip(cols, row):
            entries[(i, j)] = int(value)
    return Tableau(shape, entries, order_type)


def validate(t: Tableau) -> bool:
    """所有相邻格子的比值关系（交叉相乘），带横线类型要求元素为正"""
    ot = t.type
    low = 1 if ot.is_bar else 0
    for (i, j), a in t.entries.items():
        if a < low:
            return False
        d = ot.denominator(i, j)
        if (i, j + 1) in t.entries:
            if not ratio_holds(a, d, ot.row, t.entries[(i, j + 1)], ot.denominator(i, j + 1)):
                return False
        if (i + 1, j) in t.entries:
            if not ratio_holds(a, d, ot.col, t.entries[(i + 1, j)], ot.denominator(i + 1, j)):
                return False
    return True


def weight(t: Tableau, bar: Optional[bool] = None) -> Tuple[int, LaurentPoly]:
    """
    主特殊化下的权重 (q指数, u^a v^b)

    Args:
        t: 讲堂表
        bar: True 用上取整，False 用下取整；默认由类型决定
    """
    if bar is None:
        bar = t.type.is_bar
    u_exp = 0
    odd = 0
    for (i, j), a in t.entries.items():
        d = t.type.denominator(i, j)
        r = -((-a) // d) if bar else a // d
        u_exp += r
        odd += r % 2
    return t.size, LaurentPoly.monomial(u_exp, odd)


def _shift(t: Tableau, delta: int, target: Tuple[str, str]) -> Tableau:
    order_type = OrderType(target[0], target[1], t.type.n)
    return Tableau(t.shape, {c: a + delta for c, a in t.entries.items()}, order_type)


def tableau_plus(t: Tableau) -> Tableau:
    """T -> T⁺：每个元素加1，(≥,>) -> (>,≥)，(<,≤) -> (≤,<)"""
    pair = (t.type.row, t.type.col)
    if pair not in PLUS_TYPES:
        raise ValueError(f"tableau_plus 只接受 ge-gt 或 lt-le 类型: {t.type.name}")
    return _shift(t, 1, PLUS_TYPES[pair])


def tableau_minus(t: Tableau) -> Tableau:
    """tableau_plus 的逆"""
    inverse = {v: k for k, v in PLUS_TYPES.items()}
    pair = (t.type.row, t.type.col)
    if pair not in inverse:
        raise ValueError(f"tableau_minus 只接受 gt-ge 或 le-lt 类型: {t.type.name}")
    if any(a < 1 for a in t.entries.values()):
        raise ValueError("带横线的表元素必须为正")
    return _shift(t, -1, inverse[pair])


def tableau_to_json(t: Tableau) -> Dict[str, Any]:
    return {
        "shape": list(t.shape.outer.parts),
        "inner": list(t.shape.inner.parts),
        "n": t.type.n,
        "type": t.type.name,
        "entries": t.rows(),
    }


def tableau_from_json(data: Dict[str, Any]) -> Tableau:
    shape = SkewShape(Partition(tuple(data["shape"])), Partition(tuple(data.get("inner", ()))))
    return tableau_from_rows(shape, data["entries"], OrderType.named(data["type"], int(data["n"])))
