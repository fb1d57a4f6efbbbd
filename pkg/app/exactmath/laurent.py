# app/exactmath/laurent.py
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]


class LaurentPoly:
    """
    u, v 的整系数Laurent多项式

    项以 (u指数, v指数) -> 整数系数 存储，不保存零系数；构造后不可变。
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[Exponent, int]] = None):
        clean: Dict[Exponent, int] = {}
        if terms:
            for (i, j), c in terms.items():
                if c:
                    clean[(int(i), int(j))] = int(c)
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, u: int = 0, v: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls({(u, v): coeff})

    @classmethod
    def coerce(cls, value: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"无法转换为Laurent多项式: {value!r}")
        return cls.constant(value)

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Exponent, int]]:
        """按指数排序的项列表"""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, u: int, v: int) -> int:
        return self._terms.get((u, v), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Z[u^±, v^±] 中的可逆元：±单项式"""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def __add__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly()
        out: Dict[Exponent, int] = {}
        for (a, b), c in self._terms.items():
            for (x, y), d in other._terms.items():
                key = (a + x, b + y)
                out[key] = out.get(key, 0) + c * d
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if not self.is_unit():
                raise ValueError("只有单位元可以取负幂")
            ((i, j), c), = self._terms.items()
            return LaurentPoly({(i * e, j * e): c ** (-e)})
        result = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def invert_v(self) -> "LaurentPoly":
        """代换 v -> 1/v"""
        return LaurentPoly({(i, -j): c for (i, j), c in self._terms.items()})

    def evaluate(self, u: Scalar, v: Scalar) -> Fraction:
        """在有理点 (u, v) 处求值"""
        total = Fraction(0)
        u, v = Fraction(u), Fraction(v)
        for (i, j), c in self._terms.items():
            if (u == 0 and i < 0) or (v == 0 and j < 0):
                raise ValueError("在零点处出现负指数")
            total += c * u ** i * v ** j
        return total

    def specialize(self, u: Optional[int] = None, v: Optional[int] = None) -> "LaurentPoly":
        """
        把 u 或 v 换成整数值，结果仍为Laurent多项式

        Args:
            u: u的整数取值，None表示保留
            v: v的整数取值，None表示保留
        """
        out: Dict[Exponent, int] = {}
        for (i, j), c in self._terms.items():
            if u is not None:
                if u == 0 and i < 0:
                    raise ValueError("u=0 处出现负指数")
                if i < 0 and abs(u) != 1:
                    raise ValueError(f"u={u} 不能取负幂")
                c = c * (u ** i if i >= 0 else u ** (-i))
                i = 0
            if v is not None:
                if v == 0 and j < 0:
                    raise ValueError("v=0 处出现负指数")
                if j < 0 and abs(v) != 1:
                    raise ValueError(f"v={v} 不能取负幂")
                c = c * (v ** j if j >= 0 else v ** (-j))
                j = 0
            out[(i, j)] = out.get((i, j), 0) + c
        return LaurentPoly(out)

    def to_json(self) -> List[List[Union[int, str]]]:
        return [[i, j, str(c)] for (i, j), c in self.items()]

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            mono = ""
            if i:
                mono += "u" if i == 1 else f"u^{i}"
            if j:
                mono += "v" if j == 1 else f"v^{j}"
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")
