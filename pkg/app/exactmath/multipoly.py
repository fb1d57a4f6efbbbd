# app/exactmath/multipoly.py
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.rings import ring

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def poly_ring(nvars: int):
    """x1..xn 上的有理系数多项式环（按变量个数缓存）"""
    names = ",".join(f"x{i}" for i in range(1, nvars + 1))
    R, *gens = ring(names, QQ)
    return R, tuple(gens)


def to_qq(c: Scalar):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class MultiPoly:
    """
    x1..xn 的有理系数多项式

    底层使用 sympy 的稀疏多项式环，提供精确除法与按单项式取系数。
    """

    __slots__ = ("nvars", "_p")

    def __init__(self, nvars: int, element=None):
        if nvars < 1:
            raise ValueError(f"变量个数必须为正: {nvars}")
        R, _ = poly_ring(nvars)
        self.nvars = nvars
        self._p = R.zero if element is None else element

    @property
    def element(self):
        """底层 sympy 环元素"""
        return self._p

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        """第 i 个变量 x_i（从1开始）"""
        if not 1 <= i <= nvars:
            raise ValueError(f"变量下标越界: x{i} (n={nvars})")
        _, gens = poly_ring(nvars)
        return cls(nvars, gens[i - 1])

    @classmethod
    def constant(cls, c: Scalar, nvars: int) -> "MultiPoly":
        R, _ = poly_ring(nvars)
        return cls(nvars, R.ground_new(to_qq(c)))

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(1, nvars)

    @classmethod
    def from_terms(cls, terms: Dict[Monomial, Scalar], nvars: int) -> "MultiPoly":
        R, _ = poly_ring(nvars)
        return cls(nvars, R.from_dict({tuple(m): to_qq(c) for m, c in terms.items() if c}))

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"变量个数不一致: {self.nvars} != {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(other, self.nvars)
        raise TypeError(f"无法与多项式运算: {other!r}")

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return MultiPoly(self.nvars, self._p + other._p)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, -self._p)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return MultiPoly(self.nvars, self._p - other._p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return MultiPoly(self.nvars, self._p * other._p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        return MultiPoly(self.nvars, self._p ** e)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """精确除法；余数非零视为实现错误"""
        other = self._lift(other)
        if not other._p:
            raise ZeroDivisionError("除以零多项式")
        quotient, remainder = divmod(self._p, other._p)
        if remainder:
            raise ArithmeticError("多项式除法余数非零")
        return MultiPoly(self.nvars, quotient)

    def __eq__(self, other) -> bool:
        try:
            other = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms().items()))))

    def __bool__(self) -> bool:
        return bool(self._p)

    def coefficient(self, monomial: Sequence[int]) -> Fraction:
        key = tuple(monomial)
        if len(key) != self.nvars:
            raise ValueError(f"单项式长度应为 {self.nvars}")
        return to_fraction(self._p.get(key, QQ.zero))

    def terms(self) -> Dict[Monomial, Fraction]:
        return {tuple(m): to_fraction(c) for m, c in self._p.items()}

    def total_degree(self) -> int:
        return max((sum(m) for m in self._p.keys()), default=0)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """变量置换：新多项式中 x_{perm[i]+1} 取代 x_{i+1}（下标从0开始）"""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"非法置换: {perm}")
        out: Dict[Monomial, Fraction] = {}
        for m, c in self.terms().items():
            new = [0] * self.nvars
            for i, e in enumerate(m):
                new[perm[i]] = e
            out[tuple(new)] = c
        return MultiPoly.from_terms(out, self.nvars)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"求值点维数应为 {self.nvars}")
        xs = [Fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms().items():
            term = c
            for x, e in zip(xs, m):
                if e:
                    term *= x ** e
            total += term
        return total

    def abs_coefficient_sum(self) -> Fraction:
        return sum((abs(c) for c in self.terms().values()), Fraction(0))

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.nvars}: {self._p})"


def vandermonde(nvars: int) -> MultiPoly:
    """Δ(x) = ∏_{i<j} (x_i - x_j)"""
    result = MultiPoly.one(nvars)
    xs = [MultiPoly.variable(i, nvars) for i in range(1, nvars + 1)]
    for i in range(nvars):
        for j in range(i + 1, nvars):
            result = result * (xs[i] - xs[j])
    return result
