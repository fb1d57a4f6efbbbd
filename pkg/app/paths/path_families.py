# app/paths/path_families.py
import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.determinant import det
from app.exactmath.laurent import LaurentPoly
from app.exactmath.qseries import QSeries
from app.lhcomb.bounded_sequence import Variant
from app.lhcomb.lh_functions import e_series, h_series
from app.lhcomb.sequence_enumerator import iter_set
from app.partitions.partition import SkewShape, conjugate
from app.paths.lattice_path import (
    Height,
    LatticePath,
    PathKind,
    Step,
    intervals_overlap,
    path_from_sequence,
    path_weight,
    sequence_from_path,
)
from app.tableaux.enumerator import iter_tableaux
from app.tableaux.tableau import OrderType, Tableau, validate, weight

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


def nw_endpoints(shape: SkewShape, n: int) -> List[Tuple[int, int]]:
    """第i行: A_i = (λ_i+n-i, 0)，B_i = (μ_i+n-i, ∞)"""
    lam, mu = shape.outer, shape.inner
    return [(lam[i] + n - i, mu[i] + n - i) for i in range(1, n + 1)]


def ne_endpoints(shape: SkewShape, n: int) -> List[Tuple[int, int]]:
    """第j列: A_j = (n-λ'_j+j-1, 平移0)，B_j = (n-μ'_j+j-1, ∞)"""
    lc, mc = conjugate(shape.outer), conjugate(shape.inner)
    return [(n - lc[j] + j - 1, n - mc[j] + j - 1) for j in range(1, len(lc) + 1)]


def _require_ge_gt(order_type: OrderType) -> None:
    if order_type.name != "ge-gt":
        raise ValueError(f"格路族只对应 ge-gt 类型: {order_type.name}")


def filling_to_paths(t: Tableau, kind: PathKind = PathKind.NW) -> List[LatticePath]:
    """
    任意填充 -> 格路族（不检查讲堂条件）

    NW: 每行一条路径，格子 (i,j) 是第 n+j-i 列的西步，高度 T(i,j)/(n+j-i)
    NE: 每列一条路径，格子 (i,j) 是进入第 n+j-i 列的东北步

    非法填充可能给出非单调的"路径"，由 family_is_valid 判别。

    Args:
        t: ge-gt 类型的填充
        kind: 路径类型
    """
    _require_ge_gt(t.type)
    n = t.type.n
    mu = t.shape.inner
    paths: List[LatticePath] = []
    if kind is PathKind.NW:
        for i, (start, end) in enumerate(nw_endpoints(t.shape, n), start=1):
            steps = []
            for k in range(1, start - end + 1):
                column = end + k
                steps.append(Step(column, Fraction(t[(i, mu[i] + k)], column)))
            paths.append(LatticePath(PathKind.NW, start, end, tuple(steps)))
        return paths
    mc = conjugate(mu)
    for j, (start, end) in enumerate(ne_endpoints(t.shape, n), start=1):
        steps = []
        for k in range(1, end - start + 1):
            column = end - k + 1
            steps.append(Step(column, Fraction(t[(mc[j] + k, j)], column)))
        paths.append(LatticePath(PathKind.NE, start, end, tuple(steps)))
    return paths


def tableau_to_paths(t: Tableau, kind: PathKind = PathKind.NW) -> List[LatticePath]:
    """讲堂表 -> 不相交格路族；不满足讲堂条件的填充抛出 ValueError"""
    if not validate(t):
        raise ValueError(f"不是合法的讲堂表: {t.rows()}")
    return filling_to_paths(t, kind)


def family_is_valid(paths: Sequence[LatticePath]) -> bool:
    """每条路径单调且路径族不相交；对填充而言等价于讲堂条件"""
    return all(p.is_monotone() for p in paths) and family_is_disjoint(paths)


def family_is_disjoint(paths: Sequence[LatticePath]) -> bool:
    """逐列检查各路径占据的闭区间两两不交"""
    by_column: Dict[int, List[Tuple[Height, Height]]] = {}
    for path in paths:
        for column, interval in path.column_intervals().items():
            by_column.setdefault(column, []).append(interval)
    for intervals in by_column.values():
        intervals.sort()
        for first, second in zip(intervals, intervals[1:]):
            if intervals_overlap(first, second):
                return False
    return True


def family_weight(paths: Sequence[LatticePath]) -> Tuple[int, LaurentPoly]:
    q_exp = 0
    monomial = LaurentPoly.one()
    for path in paths:
        d, w = path_weight(path)
        q_exp += d
        monomial = monomial * w
    return q_exp, monomial


def paths_to_tableau(paths: Sequence[LatticePath], shape: SkewShape, n: int,
                     kind: Optional[PathKind] = None) -> Tableau:
    """
    tableau_to_paths 的逆；相交或端点不符的路径族被拒绝

    Args:
        paths: NW 或 NE 路径族（同一类型）
        shape: 斜形状
        n: 参数 n
        kind: 路径类型；默认取路径族自身的类型，空族按 NW
    """
    kinds = {p.kind for p in paths}
    if len(kinds) > 1 or (kind is not None and kinds - {kind}):
        raise ValueError("路径族类型不一致")
    if kind is None:
        kind = kinds.pop() if kinds else PathKind.NW
    expected = nw_endpoints(shape, n) if kind is PathKind.NW else ne_endpoints(shape, n)
    actual = [(p.start, p.end) for p in paths]
    if actual != expected:
        raise ValueError(f"路径端点 {actual} 与形状 {shape} 不符，应为 {expected}")
    if not all(p.is_monotone() for p in paths):
        raise ValueError("路径族中含有非法路径")
    if not family_is_disjoint(paths):
        raise ValueError("路径族相交")
    entries: Dict[Tuple[int, int], int] = {}
    mu = shape.inner
    if kind is PathKind.NW:
        for i, path in enumerate(paths, start=1):
            for k, step in enumerate(path.steps, start=1):
                entries[(i, mu[i] + k)] = step.value
    else:
        mc = conjugate(mu)
        for j, path in enumerate(paths, start=1):
            for k, step in enumerate(path.steps, start=1):
                entries[(mc[j] + k, j)] = step.value
    t = Tableau(shape, entries, OrderType.named("ge-gt", n))
    if not validate(t):
        raise ValueError("重建的表不满足讲堂条件")
    return t


def _w_entry(i: int, j: int, cap: int) -> QSeries:
    # W_{i,j} = h^{(j+1)}_{i-j}
    k = i - j
    if k < 0:
        return QSeries.zero(cap)
    if k == 0:
        return QSeries.one(cap)
    return h_series(j + 1, k, cap)


def _e_entry(i: int, j: int, cap: int) -> QSeries:
    # E_{i,j} = e^{(j)}_{j-i}
    k = j - i
    if k < 0 or k > j:
        return QSeries.zero(cap)
    if k == 0:
        return QSeries.one(cap)
    return e_series(j, k, cap)


def lgv_determinants(shape: SkewShape, n: int, cap: int) -> Tuple[QSeries, QSeries]:
    """det(W_{λ_i+n-i, μ_j+n-j}) 与 det(E_{n-λ'_i+i-1, n-μ'_j+j-1})"""
    nw = nw_endpoints(shape, n)
    w_matrix = [[_w_entry(a, b, cap) for _, b in nw] for a, _ in nw]
    ne = ne_endpoints(shape, n)
    e_matrix = [[_e_entry(a, b, cap) for _, b in ne] for a, _ in ne]
    one = QSeries.one(cap)
    return det(w_matrix, one=one), det(e_matrix, one=one)


def family_series(shape: SkewShape, n: int, cap: int, kind: PathKind) -> QSeries:
    """枚举所有 (≥,>) 型表并经由格路族累加权重；遇到相交族即报错"""
    counts: Dict[Tuple[int, int, int], int] = {}
    for t in iter_tableaux(shape, OrderType.named("ge-gt", n), cap):
        paths = tableau_to_paths(t, kind)
        if not family_is_valid(paths):
            raise ArithmeticError(f"合法表对应的路径族相交: {t.rows()}")
        d, monomial = family_weight(paths)
        for (u, v), c in monomial.items():
            key = (d, u, v)
            counts[key] = counts.get(key, 0) + c
    return QSeries.from_counts(counts, cap)


def lgv_check(shape: SkewShape, n: int, cap: int) -> bool:
    """
    不相交格路族的权重和等于单路径生成函数的行列式

    Args:
        shape: 斜形状，ℓ(λ) ≤ n
        n: 参数 n
        cap: 截断次数
    """
    if len(shape.outer) > n:
        raise ValueError(f"需要 ℓ(λ) ≤ n: ℓ={len(shape.outer)}, n={n}")
    w_det, e_det = lgv_determinants(shape, n, cap)
    nw_sum = family_series(shape, n, cap, PathKind.NW)
    ne_sum = family_series(shape, n, cap, PathKind.NE)
    ok = nw_sum == w_det and ne_sum == e_det
    if not ok:
        mismatch = nw_sum.first_mismatch(w_det) or ne_sum.first_mismatch(e_det)
        logger.error(f"LGV 检查失败: {shape}, n={n}, 首个不一致 {mismatch}")
    return ok


def sequence_path_check(variant: Variant, n: int, k: int, cap: int) -> bool:
    """AL/L 序列与格路互逆，且格路权重等于序列的 (|·|, |⌊·⌋|, o(⌊·⌋)) 统计"""
    for seq in iter_set(variant, n, k, cap):
        path = path_from_sequence(seq)
        d, monomial = path_weight(path)
        q_exp, u_exp, odd = seq.statistics()
        if sequence_from_path(path) != seq or (d, monomial) != (q_exp, LaurentPoly.monomial(u_exp, odd)):
            logger.error(f"序列与格路的对应失败: {variant.value}_{{{n},{k}}} {seq.entries}")
            return False
    return True


def tableau_path_roundtrip_check(shape: SkewShape, n: int, cap: int) -> bool:
    """每个 (≥,>) 型表的 NW/NE 路径族不相交、权重不变且能还原出原表"""
    for t in iter_tableaux(shape, OrderType.named("ge-gt", n), cap):
        for kind in (PathKind.NW, PathKind.NE):
            paths = tableau_to_paths(t, kind)
            if not family_is_valid(paths) or family_weight(paths) != weight(t, bar=False):
                logger.error(f"{kind.value} 路径族非法: {t.rows()}")
                return False
            if paths_to_tableau(paths, shape, n, kind) != t:
                logger.error(f"{kind.value} 路径族不能还原原表: {t.rows()}")
                return False
    return True


def path_criterion_check(shape: SkewShape, n: int, max_entry: int) -> bool:
    """
    元素不超过 max_entry 的所有填充上：讲堂条件成立当且仅当 NW/NE 路径族合法

    Args:
        shape: 斜形状
        n: 参数 n
        max_entry: 元素上界
    """
    order_type = OrderType.named("ge-gt", n)
    cells = list(shape.cells())
    for values in product(range(max_entry + 1), repeat=len(cells)):
        t = Tableau(shape, dict(zip(cells, values)), order_type)
        expected = validate(t)
        for kind in (PathKind.NW, PathKind.NE):
            if family_is_valid(filling_to_paths(t, kind)) != expected:
                logger.error(f"{kind.value} 路径族判据与讲堂条件不一致: {t.rows()}")
                return False
    return True
