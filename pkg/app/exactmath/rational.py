# app/exactmath/rational.py
from fractions import Fraction
from typing import Union

# 任意精度有理数，始终约分且分母为正
BigRational = Fraction

RationalLike = Union[int, Fraction, str]


def parse_rational(text: RationalLike) -> Fraction:
    """
    解析有理数参数

    接受 "p/q"、整数或十进制字符串（如 "1e-15"），拒绝浮点对象。

    Args:
        text: 待解析的值
    """
    if isinstance(text, float):
        raise TypeError(f"拒绝浮点数参数: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"无法解析有理数: {text!r}") from e


def format_rational(x: Fraction) -> str:
    """规范的十进制字符串形式"""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def qpoch_value(c: Fraction, q: Fraction, k: int) -> Fraction:
    """(c; q)_k 在有理点的值"""
    if k < 0:
        raise ValueError(f"Pochhammer长度必须非负: {k}")
    result = Fraction(1)
    term = Fraction(c)
    for _ in range(k):
        result *= 1 - term
        term *= q
    return result


def gauss_binomial_value(n: int, k: int, q: Fraction) -> Fraction:
    """Gauss二项式系数在有理q处的值；越界返回0"""
    if k < 0 or k > n:
        return Fraction(0)
    one = Fraction(1)
    return qpoch_value(one * q, q, n) / (qpoch_value(one * q, q, k) * qpoch_value(one * q, q, n - k))


def nonzero(x: Fraction, what: str) -> Fraction:
    """检查分母不为零"""
    if x == 0:
        raise ValueError(f"分母在给定参数处为零: {what}")
    return x
