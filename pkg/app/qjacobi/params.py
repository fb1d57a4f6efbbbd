# app/qjacobi/params.py
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from app.config import DEFAULT_A, DEFAULT_B, DEFAULT_Q, DEFAULT_U, DEFAULT_V
from app.exactmath.rational import RationalLike, format_rational, parse_rational

# 拒绝采样时检查 1 - ab q^m ≠ 0 的 m 范围
POLE_CHECK_RANGE = 64


@dataclass(frozen=True)
class SpecParams:
    """
    有理参数 (q, a, b)，可选记录 (u, v)

    由 (u, v) 构造时 a = -uv, b = -u/v。
    """

    q: Fraction
    a: Fraction
    b: Fraction
    u: Optional[Fraction] = None
    v: Optional[Fraction] = None

    def __post_init__(self):
        for name in ("q", "a", "b", "u", "v"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, parse_rational(value))
        if not 0 < self.q < 1:
            raise ValueError(f"需要 0 < q < 1: q={self.q}")

    @classmethod
    def from_uv(cls, q: RationalLike, u: RationalLike, v: RationalLike) -> "SpecParams":
        u, v = parse_rational(u), parse_rational(v)
        if v == 0:
            raise ValueError("v 不能为0")
        return cls(parse_rational(q), -u * v, -u / v, u, v)

    @classmethod
    def default(cls) -> "SpecParams":
        return cls(parse_rational(DEFAULT_Q), parse_rational(DEFAULT_A), parse_rational(DEFAULT_B))

    @classmethod
    def default_uv(cls) -> "SpecParams":
        return cls.from_uv(DEFAULT_Q, DEFAULT_U, DEFAULT_V)

    @property
    def ab(self) -> Fraction:
        return self.a * self.b

    def has_pole(self, max_power: int = POLE_CHECK_RANGE) -> bool:
        """1 - ab q^m 或 1 - a q^m 在 0 ≤ m ≤ max_power 内是否为零"""
        power = Fraction(1)
        for _ in range(max_power + 1):
            if self.ab * power == 1 or self.a * power == 1:
                return True
            power *= self.q
        return False

    def to_json(self) -> Dict[str, Any]:
        data = {"q": format_rational(self.q), "a": format_rational(self.a), "b": format_rational(self.b)}
        if self.u is not None:
            data["u"] = format_rational(self.u)
            data["v"] = format_rational(self.v)
        return data


def draw_rational(rng: random.Random, low: int, high: int, max_den: int) -> Fraction:
    den = rng.randint(2, max_den)
    return Fraction(rng.randint(low * den, high * den), den)


def random_params(rng: random.Random, max_den: int = 12, from_uv: bool = False) -> SpecParams:
    """
    随机有理参数：q ∈ (0,1)，a, b ∈ (-1,1) 且非零；拒绝落在极点上的抽样

    Args:
        rng: 随机数生成器（调用方负责设种子）
        max_den: 分母上限
        from_uv: 为 True 时抽取 (u, v) 再换算 a, b
    """
    while True:
        q = draw_rational(rng, 0, 1, max_den)
        if not 0 < q < 1:
            continue
        if from_uv:
            u = draw_rational(rng, -1, 1, max_den)
            v = draw_rational(rng, -1, 1, max_den)
            if u == 0 or v == 0 or abs(u / v) >= 1:
                continue
            params = SpecParams.from_uv(q, u, v)
        else:
            a = draw_rational(rng, -1, 1, max_den)
            b = draw_rational(rng, -1, 1, max_den)
            if a == 0 or b == 0 or abs(a) >= 1 or abs(b) >= 1:
                continue
            params = SpecParams(q, a, b)
        if not params.has_pole():
            return params
