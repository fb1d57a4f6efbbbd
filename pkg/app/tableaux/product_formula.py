# app/tableaux/product_formula.py
import logging
from typing import List, Optional, Tuple

from app.config import LOG_FORMAT, LOG_LEVEL
from app.exactmath.laurent import LaurentPoly
from app.exactmath.qpoly import cyclotomic_quotient, polynomial_series
from app.exactmath.qseries import QSeries, qpoch_inverse_series, qpoch_series
from app.lhcomb.closed_forms import NEG_UV, U_SQUARED
from app.partitions.partition import Partition, SkewShape, conjugate, n_stat
from app.partitions.principal import principal_skew_schur_limit
from app.tableaux.enumerator import ls_series
from app.tableaux.tableau import OrderType

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


def _vandermonde_factors(lam: Partition, n: int) -> Tuple[List[int], List[int]]:
    # (q^{λ_j+n-j} - q^{λ_i+n-i}) / (q^{i-1} - q^{j-1}) = q^{λ_j+n-j-i+1} (1-q^{λ_i-λ_j+j-i}) / (1-q^{j-i})
    numerator, denominator = [], []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            numerator.append(lam[i] - lam[j] + j - i)
            denominator.append(j - i)
    return numerator, denominator


def vandermonde_ratio_series(lam: Partition, n: int, cap: int, shift: Optional[int] = None) -> QSeries:
    """
    ∏_{i<j} (q^{λ_j+n-j} - q^{λ_i+n-i}) / (q^{i-1} - q^{j-1})

    约去公因子后的q幂为 n(λ)；整除性由 cyclotomic_quotient 检查。

    Args:
        lam: 分拆，ℓ(λ) ≤ n
        n: 变量个数
        cap: 截断次数
        shift: 替换默认的 q 幂 n(λ)
    """
    numerator, denominator = _vandermonde_factors(lam, n)
    coeffs = cyclotomic_quotient(numerator, denominator)
    return polynomial_series(coeffs, n_stat(lam) if shift is None else shift, cap)


def _ge_gt_product(lam: Partition, n: int, cap: int) -> QSeries:
    result = vandermonde_ratio_series(lam, n, cap)
    for i in range(1, n + 1):
        if lam[i] == 0:
            continue
        result = result * qpoch_series(NEG_UV, n - i + 1, lam[i], cap)
        result = result * qpoch_inverse_series(U_SQUARED, 2 * n - i + 1, lam[i], cap)
    return result


def _lt_le_product(lam: Partition, n: int, cap: int) -> QSeries:
    # q^{n(λ')-n(λ)} 与 Vandermonde 比值的 q^{n(λ)} 合并为 q^{n(λ')}
    result = vandermonde_ratio_series(lam, n, cap, shift=n_stat(conjugate(lam)))
    for i in range(1, n + 1):
        result = result * qpoch_series(NEG_UV, n - i + 1, lam[i], cap)
        result = result * qpoch_inverse_series(U_SQUARED, n - i + 1 + lam[i], n - i + lam[i], cap)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            e = 2 * n + lam[i] + lam[j] - i - j + 1
            result = result - result.shift(e) * U_SQUARED
    return result


def ls_product(lam: Partition, order_type: OrderType, cap: int) -> QSeries:
    """
    直形状讲堂Schur级数的乘积公式

    (≥,>): V_λ ∏_i (-uvq^{n-i+1})_{λ_i} / (u²q^{2n-i+1})_{λ_i}
    (<,≤): q^{n(λ')-n(λ)} V_λ ∏_i (-uvq^{n-i+1})_{λ_i} / (u²q^{n-i+1+λ_i})_{n-i+λ_i}
           × ∏_{i<j} (1 - u²q^{2n+λ_i+λ_j-i-j+1})
    带横线类型: (uvq)^{|λ|} 乘以对应无横线类型在 v -> 1/v 下的值

    Args:
        lam: 分拆
        order_type: 四种命名类型之一
        cap: 截断次数
    """
    n = order_type.n
    if len(lam) > n:
        raise ValueError(f"需要 ℓ(λ) ≤ n: ℓ={len(lam)}, n={n}")
    name = order_type.name
    if name in ("ge-gt", "gt-ge"):
        base = _ge_gt_product(lam, n, cap)
    elif name in ("lt-le", "le-lt"):
        base = _lt_le_product(lam, n, cap)
    else:
        raise ValueError(f"乘积公式只适用于四种命名类型: {name}")
    if not order_type.is_bar:
        return base
    size = lam.size
    return base.invert_v().shift(size) * LaurentPoly.monomial(size, size)


def stability_check(shape: SkewShape, n: int, cap: int) -> bool:
    """
    (≥,>) 型级数关于 n 的稳定性

    次数 d ≤ min(cap, n-ℓ(λ)) 时所有元素都小于分母，floor 全为0，
    合法表即逆半标准表：n 与 n+1 的系数一致，且等于 s_{λ/μ}(1, q, q², ...) 的系数。
    """
    if len(shape.outer) > n:
        raise ValueError(f"需要 ℓ(λ) ≤ n: ℓ={len(shape.outer)}, n={n}")
    depth = min(cap, n - len(shape.outer))
    lower = ls_series(shape, OrderType.named("ge-gt", n), depth)
    upper = ls_series(shape, OrderType.named("ge-gt", n + 1), depth)
    limit = principal_skew_schur_limit(shape, depth)
    ok = lower == upper == limit
    if not ok:
        mismatch = lower.first_mismatch(upper) or lower.first_mismatch(limit)
        logger.error(f"稳定性检查失败: {shape}, n={n}, 首个不一致 {mismatch}")
    return ok
