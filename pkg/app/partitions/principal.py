# app/partitions/principal.py
from app.exactmath.determinant import det
from app.exactmath.qpoly import cyclotomic_quotient, polynomial_series
from app.exactmath.qseries import QSeries, gauss_binomial, qpoch_inverse_series
from app.partitions.partition import Partition, SkewShape, hook_length, n_stat


def principal_schur(lam: Partition, n: int, cap: int) -> QSeries:
    """
    s_λ(1, q, ..., q^{n-1}) 的截断展开（钩长-内容公式）

    Args:
        lam: 分拆
        n: 变量个数
        cap: 截断次数
    """
    if len(lam) > n:
        return QSeries.zero(cap)
    numerator = []
    denominator = []
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i] + 1):
            numerator.append(n + j - i)
            denominator.append(hook_length(lam, i, j))
    coeffs = cyclotomic_quotient(numerator, denominator)
    return polynomial_series(coeffs, n_stat(lam), cap)


def principal_h(n: int, k: int, cap: int) -> QSeries:
    """h_k(1, ..., q^{n-1}) = [n+k-1, k]_q"""
    if k < 0:
        return QSeries.zero(cap)
    return gauss_binomial(n + k - 1, k, cap)


def principal_e(n: int, k: int, cap: int) -> QSeries:
    """e_k(1, ..., q^{n-1}) = q^{C(k,2)} [n, k]_q"""
    if k < 0 or k > n:
        return QSeries.zero(cap)
    return gauss_binomial(n, k, cap).shift(k * (k - 1) // 2)


def principal_skew_schur_limit(shape: SkewShape, cap: int) -> QSeries:
    """
    s_{λ/μ}(1, q, q², ...) 的截断展开

    Jacobi-Trudi 行列式 det(h_{λ_i-μ_j-i+j})，其中 h_k(1, q, ...) = 1/(q; q)_k
    """
    lam, mu = shape.outer, shape.inner
    size = len(lam)

    def h(k: int) -> QSeries:
        if k < 0:
            return QSeries.zero(cap)
        return qpoch_inverse_series(1, 1, k, cap)

    matrix = [[h(lam[i] - mu[j] - i + j) for j in range(1, size + 1)]
              for i in range(1, size + 1)]
    return det(matrix, one=QSeries.one(cap))
