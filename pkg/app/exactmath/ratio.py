# app/exactmath/ratio.py
# 比值 a/s 与 b/t 的比较一律用整数交叉相乘 a*t 与 b*s
from typing import Optional, Tuple

RELATIONS = ("<", "<=", ">", ">=")

# 命令行与文档中的符号别名
RELATION_ALIASES = {
    "<": "<", "lt": "<",
    "<=": "<=", "≤": "<=", "le": "<=",
    ">": ">", "gt": ">",
    ">=": ">=", "≥": ">=", "ge": ">=",
}


def normalize_relation(rel: str) -> str:
    try:
        return RELATION_ALIASES[rel]
    except KeyError as e:
        raise ValueError(f"未知的序关系: {rel!r}") from e


def ratio_holds(a: int, s: int, rel: str, b: int, t: int) -> bool:
    """判断 a/s rel b/t（s, t > 0）"""
    left, right = a * t, b * s
    if rel == "<":
        return left < right
    if rel == "<=":
        return left <= right
    if rel == ">":
        return left > right
    if rel == ">=":
        return left >= right
    raise ValueError(f"未知的序关系: {rel!r}")


def bound_left(rel: str, s: int, b: int, t: int) -> Tuple[Optional[int], Optional[int]]:
    """
    已知 b/t，求满足 a/s rel b/t 的整数 a 的区间 (下界, 上界)，None 表示无界

    Args:
        rel: 关系
        s: a 的分母
        b: 已知分子
        t: 已知分母
    """
    bs = b * s
    if rel == ">=":
        return -((-bs) // t), None
    if rel == ">":
        return bs // t + 1, None
    if rel == "<=":
        return None, bs // t
    if rel == "<":
        return None, (bs - 1) // t
    raise ValueError(f"未知的序关系: {rel!r}")


def bound_right(a: int, s: int, rel: str, t: int) -> Tuple[Optional[int], Optional[int]]:
    """已知 a/s，求满足 a/s rel b/t 的整数 b 的区间"""
    flipped = {"<": ">", "<=": ">=", ">": "<", ">=": "<="}[rel]
    return bound_left(flipped, t, a, s)
