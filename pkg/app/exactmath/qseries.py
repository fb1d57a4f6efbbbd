# app/exactmath/qseries.py
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from app.exactmath.laurent import LaurentPoly

Coefficient = Union[LaurentPoly, int]


class QSeries:
    """
    截断到 q^cap 的幂级数，系数为 u, v 的Laurent多项式

    所有运算结果截断到 cap；不同 cap 的级数不能混合运算。
    """

    __slots__ = ("cap", "_coeffs")

    def __init__(self, cap: int, coeffs: Iterable[Coefficient] = ()):
        if cap < 0:
            raise ValueError(f"cap必须非负: {cap}")
        self.cap = cap
        data = [LaurentPoly.coerce(c) for c in coeffs][: cap + 1]
        data.extend(LaurentPoly.zero() for _ in range(cap + 1 - len(data)))
        self._coeffs: Tuple[LaurentPoly, ...] = tuple(data)

    @classmethod
    def zero(cls, cap: int) -> "QSeries":
        return cls(cap)

    @classmethod
    def one(cls, cap: int) -> "QSeries":
        return cls(cap, [LaurentPoly.one()])

    @classmethod
    def constant(cls, c: Coefficient, cap: int) -> "QSeries":
        return cls(cap, [c])

    @classmethod
    def monomial(cls, q_exp: int, coeff: Coefficient, cap: int) -> "QSeries":
        """coeff * q^q_exp；超出cap时为0"""
        if q_exp < 0:
            raise ValueError(f"q指数必须非负: {q_exp}")
        if q_exp > cap:
            return cls(cap)
        data: List[Coefficient] = [0] * q_exp + [coeff]
        return cls(cap, data)

    @classmethod
    def from_counts(cls, counts: Dict[Tuple[int, int, int], int], cap: int) -> "QSeries":
        """由 (q指数, u指数, v指数) -> 个数 的统计表构造"""
        buckets: List[Dict[Tuple[int, int], int]] = [dict() for _ in range(cap + 1)]
        for (d, i, j), c in counts.items():
            if 0 <= d <= cap:
                buckets[d][(i, j)] = buckets[d].get((i, j), 0) + c
        return cls(cap, [LaurentPoly(b) for b in buckets])

    @property
    def coeffs(self) -> Tuple[LaurentPoly, ...]:
        return self._coeffs

    def coeff(self, d: int) -> LaurentPoly:
        if 0 <= d <= self.cap:
            return self._coeffs[d]
        raise IndexError(f"q次数超出范围: {d} (cap={self.cap})")

    def _check_cap(self, other: "QSeries") -> None:
        if other.cap != self.cap:
            raise ValueError(f"cap不一致: {self.cap} != {other.cap}")

    def _scalar(self, c: Coefficient) -> "QSeries":
        c = LaurentPoly.coerce(c)
        return QSeries(self.cap, [a * c for a in self._coeffs])

    def __add__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            other = QSeries.constant(other, self.cap)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_cap(other)
        return QSeries(self.cap, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(self.cap, [-a for a in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            other = QSeries.constant(other, self.cap)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)) and not isinstance(other, bool):
            return self._scalar(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_cap(other)
        cap = self.cap
        left = [(d, a) for d, a in enumerate(self._coeffs) if a]
        right = [(d, b) for d, b in enumerate(other._coeffs) if b]
        out: List[LaurentPoly] = [LaurentPoly.zero()] * (cap + 1)
        for d1, a in left:
            for d2, b in right:
                d = d1 + d2
                if d > cap:
                    break
                out[d] = out[d] + a * b
        return QSeries(cap, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = QSeries.one(self.cap)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (LaurentPoly, int)) and not isinstance(other, bool):
            other = QSeries.constant(other, self.cap)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_cap(other)
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.cap, self._coeffs))

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def shift(self, m: int) -> "QSeries":
        """乘以 q^m"""
        if m < 0:
            raise ValueError(f"只支持非负平移: {m}")
        return QSeries(self.cap, [LaurentPoly.zero()] * m + list(self._coeffs))

    def truncate(self, cap: int) -> "QSeries":
        """显式截断到更低的 cap"""
        if cap > self.cap:
            raise ValueError(f"不能把cap={self.cap}的级数提升到{cap}")
        return QSeries(cap, self._coeffs[: cap + 1])

    def inverse(self) -> "QSeries":
        """常数项为 ±单项式 时的乘法逆"""
        c0 = self._coeffs[0]
        if not c0.is_unit():
            raise ValueError(f"常数项不可逆: {c0}")
        c0_inv = c0 ** -1
        out: List[LaurentPoly] = [c0_inv]
        for d in range(1, self.cap + 1):
            acc = LaurentPoly.zero()
            for i in range(1, d + 1):
                a = self._coeffs[i]
                if a:
                    acc = acc + a * out[d - i]
            out.append(-(acc * c0_inv))
        return QSeries(self.cap, out)

    def invert_v(self) -> "QSeries":
        """系数中代换 v -> 1/v"""
        return QSeries(self.cap, [a.invert_v() for a in self._coeffs])

    def specialize(self, u: Optional[int] = None, v: Optional[int] = None) -> "QSeries":
        return QSeries(self.cap, [a.specialize(u, v) for a in self._coeffs])

    def evaluate(self, q: Fraction, u: Fraction, v: Fraction) -> Fraction:
        """部分和在有理点的值（无尾项估计）"""
        total = Fraction(0)
        power = Fraction(1)
        for a in self._coeffs:
            if a:
                total += a.evaluate(u, v) * power
            power *= q
        return total

    def first_mismatch(self, other: "QSeries") -> Optional[Tuple[int, LaurentPoly, LaurentPoly]]:
        """返回第一个不相等的q次数及两边系数"""
        self._check_cap(other)
        for d, (a, b) in enumerate(zip(self._coeffs, other._coeffs)):
            if a != b:
                return d, a, b
        return None

    def terms(self) -> List[Tuple[int, int, int, int]]:
        """(q指数, u指数, v指数, 系数) 的规范排序列表"""
        rows = []
        for d, a in enumerate(self._coeffs):
            for (i, j), c in a.items():
                rows.append((d, i, j, c))
        return rows

    def __repr__(self) -> str:
        shown = [f"({a})q^{d}" for d, a in enumerate(self._coeffs) if a]
        return f"QSeries(cap={self.cap}: {' + '.join(shown) or '0'})"


def _coerce_monomial(c: Coefficient) -> LaurentPoly:
    return LaurentPoly.coerce(c)


def qpoch_series(c: Coefficient, m: int, k: int, cap: int) -> QSeries:
    """
    (c q^m; q)_k 截断展开

    Args:
        c: u, v 的Laurent单项式（一般Laurent多项式亦可）
        m: 起始q指数
        k: 因子个数
        cap: 截断次数
    """
    if k < 0:
        raise ValueError(f"Pochhammer长度必须非负: {k}")
    if m < 0:
        raise ValueError(f"q指数必须非负: {m}")
    c = _coerce_monomial(c)
    result = QSeries.one(cap)
    for i in range(k):
        result = result * (QSeries.one(cap) - QSeries.monomial(m + i, c, cap))
    return result


def qpoch_inverse_series(c: Coefficient, m: int, k: int, cap: int) -> QSeries:
    """1/(c q^m; q)_k 截断展开，每个因子按几何级数展开"""
    if k < 0:
        raise ValueError(f"Pochhammer长度必须非负: {k}")
    if m < 0:
        raise ValueError(f"q指数必须非负: {m}")
    c = _coerce_monomial(c)
    result = QSeries.one(cap)
    for i in range(k):
        e = m + i
        if e == 0:
            factor = QSeries.constant(LaurentPoly.one() - c, cap)
            if not factor.coeffs[0].is_unit():
                raise ValueError(f"因子 (1 - {c}) 在q^0处不可逆")
            result = result * factor.inverse()
            continue
        data: List[LaurentPoly] = [LaurentPoly.zero()] * (cap + 1)
        power = LaurentPoly.one()
        for t in range(cap // e + 1):
            data[t * e] = power
            power = power * c
        result = result * QSeries(cap, data)
    return result


def gauss_binomial(n: int, k: int, cap: int) -> QSeries:
    """Gauss二项式系数 [n k]_q 的截断展开；越界返回0"""
    if k < 0 or k > n:
        return QSeries.zero(cap)
    # 递推 [n,k] = [n-1,k-1] + q^k [n-1,k]，整数系数多项式
    rows: List[List[int]] = [[1]]
    for size in range(1, n + 1):
        new_rows: List[List[int]] = []
        for j in range(size + 1):
            poly = [0] * (j * (size - j) + 1)
            if j >= 1:
                for d, c in enumerate(rows[j - 1]):
                    poly[d] += c
            if j <= size - 1:
                for d, c in enumerate(rows[j]):
                    poly[d + j] += c
            new_rows.append(poly)
        rows = new_rows
    return QSeries(cap, rows[k])
