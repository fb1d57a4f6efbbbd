# app/verify/identity_registry.py
import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from app.config import DEFAULT_CAP, LOG_FORMAT, LOG_LEVEL, SELBERG_TERMS, SELBERG_TOLERANCE
from app.exactmath.qseries import QSeries
from app.lhcomb.bounded_sequence import BoundedSequence, Variant
from app.lhcomb.closed_forms import genfun_closed
from app.lhcomb.lh_functions import (
    anti_lecture_hall_theorem_sides,
    lecture_hall_theorem_sides,
    orthogonality_check,
)
from app.lhcomb.sequence_enumerator import genfun_enum, plus_map_check
from app.partitions.partition import Partition, SkewShape, all_skew_shapes, partitions_up_to
from app.partitions.principal import principal_schur
from app.paths.lattice_path import PathKind, path_from_sequence, sequence_from_path
from app.paths.path_families import (
    lgv_check,
    path_criterion_check,
    sequence_path_check,
    tableau_path_roundtrip_check,
)
from app.qjacobi.determinant_identities import det_lemma_check, det_prop_check
from app.qjacobi.functional import functional_moment_check, functional_orthogonality_check
from app.qjacobi.moments import (
    dual_moment_coefficients_check,
    moment_inverse_check,
    mu_recurrence_check,
    mu_vs_alhc,
    nu_vs_lhp,
)
from app.qjacobi.multivariate import expansion_check, moment_product_check, moment_product_rational_check
from app.qjacobi.params import SpecParams, random_params
from app.qjacobi.selberg import selberg_check
from app.qjacobi.univariate import little_q_jacobi
from app.tableaux.enumerator import ls_series, tableau_plus_check
from app.tableaux.jacobi_trudi import jacobi_trudi
from app.tableaux.product_formula import ls_product, stability_check
from app.tableaux.tableau import NAMED_TYPES, OrderType, tableau_from_rows, validate, weight
from app.utils.parallel import ordered_map

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)

# n=5, (6,6,4,3)/(3,1) 上的 (≥,>) 型讲堂表
SAMPLE_SHAPE = SkewShape(Partition.of(6, 6, 4, 3), Partition.of(3, 1))
SAMPLE_ROWS = [[9, 4, 3], [5, 6, 4, 3, 1], [2, 2, 1, 0], [1, 0, 0]]
SAMPLE_N = 5

# 序列与格路的对应样例：(类型, n, 元素, 起点列, 终点列)
PATH_FIXTURES = [
    (Variant.AL, 8, (5, 4, 5, 5, 3, 3), 8, 2),
    (Variant.L, 8, (15, 12, 8, 5, 3, 0), 2, 8),
]

Outcome = Union[bool, Tuple[QSeries, QSeries]]


@dataclass(frozen=True)
class CheckResult:
    identity: str
    item: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        text = f"{'PASS' if self.ok else 'FAIL'} {self.identity} {self.item}"
        return f"{text}: {self.detail}" if self.detail else text

    def to_json(self) -> Dict[str, Any]:
        return {"identity": self.identity, "item": self.item, "ok": self.ok, "detail": self.detail}


@dataclass
class VerifyOptions:
    """verify 与 selftest 共用的参数；shape 为 None 时使用默认测试集"""

    shape: Optional[SkewShape] = None
    n: Optional[int] = None
    cap: Optional[int] = None
    order_type: Optional[str] = None
    variant: Optional[Variant] = None
    params: Optional[SpecParams] = None
    terms: Optional[int] = None
    tol: str = SELBERG_TOLERANCE
    size: Optional[int] = None
    draws: Optional[int] = None
    seed: int = 0
    quick: bool = False

    def pick(self, value: Optional[int], full: int, quick: int) -> int:
        if value is not None:
            return value
        return quick if self.quick else full

    def cap_or(self, full: int = DEFAULT_CAP, quick: int = 8) -> int:
        return self.pick(self.cap, full, quick)

    def params_or(self, default: Callable[[], SpecParams] = SpecParams.default) -> SpecParams:
        """未显式给出参数时使用该恒等式的默认参数"""
        return self.params if self.params is not None else default()

    def types(self) -> List[str]:
        return [self.order_type] if self.order_type else list(NAMED_TYPES)

    def straight_shapes(self, max_size: int, max_n: int) -> List[Tuple[Partition, int]]:
        """(λ, n) 组合：给定 --shape 时只取它"""
        if self.shape is not None:
            if not self.shape.is_straight():
                raise ValueError(f"该恒等式只接受直形状: {self.shape}")
            lam = self.shape.outer
            return [(lam, self.n or max(1, len(lam)))]
        top = self.n or max_n
        return [(lam, n) for n in range(1, top + 1) for lam in partitions_up_to(max_size, n)]


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    reference: str
    runner: Callable[[VerifyOptions], List[Tuple[str, Callable[[], Outcome]]]]


def _describe_mismatch(lhs: QSeries, rhs: QSeries) -> str:
    mismatch = lhs.first_mismatch(rhs)
    if mismatch is None:
        return ""
    d, a, b = mismatch
    return f"q^{d} 处 {a} != {b}"


def _run_item(identity: str, label: str, thunk: Callable[[], Outcome]) -> CheckResult:
    try:
        outcome = thunk()
    except Exception as e:
        logger.error(f"{identity} {label} 出错: {e}")
        return CheckResult(identity, label, False, f"{type(e).__name__}: {e}")
    if isinstance(outcome, tuple):
        detail = _describe_mismatch(*outcome)
        return CheckResult(identity, label, not detail, detail)
    return CheckResult(identity, label, bool(outcome), "" if outcome else "详见日志")


def _shape_label(shape: Union[SkewShape, Partition], n: int, cap: Optional[int] = None, **extra: Any) -> str:
    text = f"{shape if isinstance(shape, SkewShape) else SkewShape(shape)} n={n}"
    for key, value in extra.items():
        text += f" {key}={value}"
    return text if cap is None else f"{text} cap={cap}"


def _param_draws(opts: VerifyOptions, full: int, quick: int) -> List[SpecParams]:
    rng = random.Random(opts.seed)
    return [random_params(rng) for _ in range(opts.pick(opts.draws, full, quick))]


def _lecture_hall(opts: VerifyOptions):
    cap = opts.cap_or()
    return [(f"n={n} cap={cap}", lambda n=n: lecture_hall_theorem_sides(n, cap))
            for n in range(1, opts.pick(opts.n, 5, 3) + 1)]


def _anti_lecture_hall(opts: VerifyOptions):
    cap = opts.cap_or()
    return [(f"n={n} cap={cap}", lambda n=n: anti_lecture_hall_theorem_sides(n, cap))
            for n in range(1, opts.pick(opts.n, 5, 3) + 1)]


def _truncated(opts: VerifyOptions):
    cap = opts.cap_or()
    variants = [opts.variant] if opts.variant else list(Variant)
    items = []
    for variant in variants:
        for n in range(1, opts.pick(opts.n, 5, 3) + 1):
            for k in range(n + 1):
                items.append((f"{variant.value} n={n} k={k} cap={cap}",
                              lambda v=variant, n=n, k=k: (genfun_enum(v, n, k, cap), genfun_closed(v, n, k, cap))))
    return items


def _plus_map(opts: VerifyOptions):
    cap = opts.cap_or(10, 6)
    items = []
    for variant in (Variant.L, Variant.AL):
        for n in range(1, opts.pick(opts.n, 4, 3) + 1):
            for k in range(n + 1):
                items.append((f"{variant.value} n={n} k={k} cap={cap}",
                              lambda v=variant, n=n, k=k: plus_map_check(v, n, k, cap)))
    shapes = [opts.shape] if opts.shape else [SkewShape(Partition.of(2, 1)), SkewShape(Partition.of(2, 2), Partition.of(1))]
    n = opts.n or 3
    for shape in shapes:
        for name in ("ge-gt", "lt-le"):
            items.append((_shape_label(shape, n, cap, type=name),
                          lambda s=shape, name=name: tableau_plus_check(s, OrderType.named(name, n), cap)))
    return items


def _orthogonality(opts: VerifyOptions):
    cap = opts.cap_or(10, 6)
    top = opts.pick(opts.n, 5, 3)
    return [(f"m={m} n={n} cap={cap}", lambda m=m, n=n: orthogonality_check(m, n, cap))
            for m in range(top + 1) for n in range(m + 1)]


def sample_tableau():
    return tableau_from_rows(SAMPLE_SHAPE, SAMPLE_ROWS, OrderType.named("ge-gt", SAMPLE_N))


def _sample_tableau_check() -> bool:
    t = sample_tableau()
    floor = weight(t, bar=False)
    ceiling = weight(t, bar=True)
    return (validate(t) and len(t.entries) == 15 and floor[0] == 41
            and floor[1].items() == [((3, 3), 1)] and ceiling[1].items() == [((13, 11), 1)])


def _sample(opts: VerifyOptions):
    return [(f"{SAMPLE_SHAPE} n={SAMPLE_N}", _sample_tableau_check)]


def _jt_shapes(opts: VerifyOptions) -> List[Tuple[SkewShape, int, int]]:
    cap = opts.cap_or(12, 6)
    if opts.shape is not None:
        return [(opts.shape, opts.n or max(1, len(opts.shape.outer)), cap)]
    if opts.quick:
        return [(shape, 2, cap) for shape in all_skew_shapes(3, 2)]
    battery = [(shape, 3, cap) for shape in all_skew_shapes(4, 3)]
    battery.append((SAMPLE_SHAPE, SAMPLE_N, opts.cap_or(12, 8)))
    return battery


def _jt(opts: VerifyOptions):
    items = []
    for shape, n, cap in _jt_shapes(opts):
        for name in opts.types():
            for form in ("h", "e"):
                def thunk(shape=shape, name=name, form=form, n=n, cap=cap):
                    order_type = OrderType.named(name, n)
                    return ls_series(shape, order_type, cap), jacobi_trudi(shape, order_type, cap, form)
                items.append((_shape_label(shape, n, cap, type=name, form=form), thunk))
    return items


def _product(opts: VerifyOptions):
    cap = opts.cap_or(12, 8)
    items = []
    for lam, n in opts.straight_shapes(opts.pick(None, 4, 3), opts.pick(None, 4, 3)):
        for name in opts.types():
            def thunk(lam=lam, n=n, name=name):
                order_type = OrderType.named(name, n)
                return ls_series(SkewShape(lam), order_type, cap), ls_product(lam, order_type, cap)
            items.append((_shape_label(lam, n, cap, type=name), thunk))
    return items


def _specialization(opts: VerifyOptions):
    cap = opts.cap_or(12, 8)
    items = []
    for lam, n in opts.straight_shapes(opts.pick(None, 5, 3), opts.pick(None, 5, 3)):
        def thunk(lam=lam, n=n):
            series = ls_series(SkewShape(lam), OrderType.named("ge-gt", n), cap).specialize(0, 0)
            return series, principal_schur(lam, n, cap)
        items.append((_shape_label(lam, n, cap), thunk))
    return items


def _stability(opts: VerifyOptions):
    cap = opts.cap_or(8, 6)
    if opts.shape is not None:
        pairs = [(opts.shape, opts.n or max(1, len(opts.shape.outer)))]
    else:
        top = opts.pick(None, 3, 2)
        pairs = [(shape, n) for shape in all_skew_shapes(top, top) for n in range(len(shape.outer), top + 1)]
    return [(_shape_label(shape, n, cap), lambda s=shape, n=n: stability_check(s, n, cap)) for shape, n in pairs]


def _moments_inverse(opts: VerifyOptions):
    size = opts.pick(opts.size, 9, 5)
    return [(f"size={size} {p.to_json()}", lambda p=p: moment_inverse_check(size, p))
            for p in _param_draws(opts, 20, 3)]


def _mu_nu(opts: VerifyOptions):
    cap = opts.cap_or()
    items = []
    for n in range(opts.pick(opts.n, 5, 3) + 1):
        for k in range(n + 1):
            items.append((f"mu n={n} k={k} cap={cap}", lambda n=n, k=k: mu_vs_alhc(n, k, cap)))
            items.append((f"nu n={n} k={k} cap={cap}", lambda n=n, k=k: nu_vs_lhp(n, k, cap)))
    return items


def _recurrence(opts: VerifyOptions):
    top = opts.pick(opts.n, 10, 6)

    def thunk(p: SpecParams) -> bool:
        for m in range(top + 1):
            little_q_jacobi(m, p)
        return mu_recurrence_check(top, p) and dual_moment_coefficients_check(top, p)
    return [(f"n≤{top} {p.to_json()}", lambda p=p: thunk(p)) for p in _param_draws(opts, 20, 3)]


def _functional(opts: VerifyOptions):
    terms = opts.terms or 80
    top = opts.pick(opts.n, 5, 3)
    p = opts.params_or()
    items = [(f"x^{n} K={terms}", lambda n=n: functional_moment_check(n, p, terms)) for n in range(top + 1)]
    items += [(f"p_{m}·p_{n} K={terms}", lambda m=m, n=n: functional_orthogonality_check(m, n, p, terms))
              for n in range(1, min(top, 3) + 1) for m in range(n)]
    return items


def _expansion(opts: VerifyOptions):
    cap = opts.cap_or(10, 6)
    params = opts.params_or(SpecParams.default_uv)
    return [(_shape_label(lam, n, cap), lambda lam=lam, n=n: expansion_check(lam, n, params, cap))
            for lam, n in opts.straight_shapes(opts.pick(None, 4, 2), opts.pick(None, 3, 2))]


def _moment_product(opts: VerifyOptions):
    cap = opts.cap_or(12, 8)
    params = opts.params_or()
    items = []
    for lam, n in opts.straight_shapes(opts.pick(None, 4, 3), opts.pick(None, 4, 3)):
        items.append((_shape_label(lam, n, cap), lambda lam=lam, n=n: moment_product_check(lam, n, cap)))
        items.append((_shape_label(lam, n, params=params.to_json()),
                      lambda lam=lam, n=n: moment_product_rational_check(lam, n, params)))
    return items


def _det(check):
    def runner(opts: VerifyOptions):
        draws = opts.pick(opts.draws, 20, 3)
        sizes = [opts.n] if opts.n else range(1, opts.pick(None, 5, 3) + 1)
        return [(f"n={n} draws={draws} seed={opts.seed}", lambda n=n: check(n, draws, opts.seed)) for n in sizes]
    return runner


def _selberg(opts: VerifyOptions):
    terms = opts.terms or SELBERG_TERMS
    if opts.shape is not None:
        pairs = opts.straight_shapes(0, 0)
    else:
        shapes = [Partition(), Partition.of(1), Partition.of(2), Partition.of(1, 1), Partition.of(2, 1)]
        if opts.quick:
            shapes = shapes[:2]
        pairs = [(lam, n) for n in (1, 2) for lam in shapes if len(lam) <= n]

    def thunk(lam: Partition, n: int) -> bool:
        return selberg_check(lam, n, opts.params_or(), terms, opts.tol).ok
    return [(_shape_label(lam, n, terms=terms), lambda lam=lam, n=n: thunk(lam, n)) for lam, n in pairs]


def _fixture_roundtrip(variant: Variant, n: int, entries: Tuple[int, ...], start: int, end: int) -> bool:
    seq = BoundedSequence(variant, n, entries)
    path = path_from_sequence(seq)
    kind = PathKind.NW if variant is Variant.AL else PathKind.NE
    return path.kind is kind and (path.start, path.end) == (start, end) and sequence_from_path(path) == seq


def _paths(opts: VerifyOptions):
    cap = opts.cap_or(12, 8)
    items = [(f"{v.value} {list(e)} n={n}", lambda f=(v, n, e, s, t): _fixture_roundtrip(*f))
             for v, n, e, s, t in PATH_FIXTURES]
    for variant in (Variant.AL, Variant.L):
        for n in range(1, opts.pick(opts.n, 6, 4) + 1):
            for k in range(n + 1):
                items.append((f"{variant.value} n={n} k={k} cap={cap}",
                              lambda v=variant, n=n, k=k: sequence_path_check(v, n, k, cap)))
    shapes = [opts.shape] if opts.shape else [SkewShape(Partition.of(2, 1)), SkewShape(Partition.of(2, 2), Partition.of(1))]
    n = opts.n or 3
    for shape in shapes:
        items.append((_shape_label(shape, n, 8), lambda s=shape: tableau_path_roundtrip_check(s, n, 8)))
    if opts.shape is None:
        # 穷举全部填充，只用于小形状
        top = opts.pick(None, 6, 3)
        for shape in shapes + [SkewShape(Partition.of(1, 1, 1))]:
            items.append((_shape_label(shape, 3, max_entry=top), lambda s=shape: path_criterion_check(s, 3, top)))
    return items


def _lgv(opts: VerifyOptions):
    if opts.shape is not None:
        pairs = [(opts.shape, opts.n or max(1, len(opts.shape.outer)), opts.cap_or(10, 8))]
    else:
        pairs = [(SkewShape(Partition.of(2, 1)), 3, 8), (SkewShape(Partition.of(2, 2), Partition.of(1)), 3, 8)]
        if not opts.quick:
            pairs.append((SkewShape(Partition.of(2, 1)), 3, 10))
    return [(_shape_label(shape, n, cap), lambda s=shape, n=n, c=cap: lgv_check(s, n, c)) for shape, n, cap in pairs]


IDENTITIES: List[Identity] = [
    Identity("lecture-hall", "Σ q^{|λ|} over L_n = 1/(q;q²)_n", "lecture hall theorem", _lecture_hall),
    Identity("anti-lecture-hall", "Σ q^{|λ|} over A_n = (-q;q)_n/(q²;q)_n", "anti-lecture hall theorem",
             _anti_lecture_hall),
    Identity("truncated", "枚举 = 乘积公式：L, L̄, AL, AL̄", "truncated lecture hall product formulas", _truncated),
    Identity("plus-map", "λ -> λ⁺ 与 T -> T⁺ 为保权双射", "plus map bijections", _plus_map),
    Identity("orthogonality", "h 与 e 讲堂函数的正交关系", "h/e orthogonality", _orthogonality),
    Identity("sample-tableau", "样例表合法，权重 u³v³ 与 u¹³v¹¹", "sample tableau weights", _sample),
    Identity("jt", "讲堂Schur级数 = Jacobi-Trudi 行列式（h 与 e 两种）", "Jacobi-Trudi formulas", _jt),
    Identity("product", "讲堂Schur级数 = 乘积公式（四种类型）", "lecture hall Schur product formulas", _product),
    Identity("specialization", "u=v=0 时等于 s_λ(1,...,q^{n-1})", "principal specialization", _specialization),
    Identity("stability", "n 与 n+1 的级数在低次项一致且等于 s_{λ/μ}(1,q,...)", "stability in n", _stability),
    Identity("moments-inverse", "(μ_{i,j}) 与 (ν_{i,j}) 互逆", "mixed moment inverse relation", _moments_inverse),
    Identity("mu-nu", "μ = AL 与 ν = (-1)^{n-k} L 的生成函数", "moments as lecture hall generating functions",
             _mu_nu),
    Identity("recurrence", "递推与超几何构造一致，混合矩递推", "three-term recurrence", _recurrence),
    Identity("functional", "线性泛函的矩与正交性（带认证上界）", "orthogonality functional", _functional),
    Identity("expansion", "s_λ = Σ M p_μ，p_λ = Σ N s_μ，且 M/N 为讲堂Schur级数", "multivariate expansions",
             _expansion),
    Identity("moment-product", "M_{λ,∅}, N_{λ,∅} 的乘积公式", "moment product formulas", _moment_product),
    Identity("det-lemma", "1/((ax)_i(b/x)_i) 行列式", "determinant lemma", _det(det_lemma_check)),
    Identity("det-prop", "x^i(b/x)_i/(ax)_i 行列式", "determinant evaluation", _det(det_prop_check)),
    Identity("selberg", "n 重q积分 = 矩的乘积公式（认证误差）", "Selberg-type q-integral", _selberg),
    Identity("paths", "序列/表 与 格路（族）的双射", "lattice path bijections", _paths),
    Identity("lgv", "不相交路径族 = 单路径行列式", "Lindström-Gessel-Viennot", _lgv),
]

REGISTRY: Dict[str, Identity] = {identity.name: identity for identity in IDENTITIES}


def get_identity(name: str) -> Identity:
    try:
        return REGISTRY[name]
    except KeyError as e:
        raise ValueError(f"未知的恒等式: {name!r}，可选 {sorted(REGISTRY)}") from e


def run_identity(name: str, opts: VerifyOptions) -> List[CheckResult]:
    """运行一个恒等式的全部测试项，结果按规范顺序返回"""
    identity = get_identity(name)
    items = identity.runner(opts)
    logger.info(f"校验 {name}: {len(items)} 项")
    return ordered_map(lambda item: _run_item(name, item[0], item[1]), items)


def run_selftest(opts: VerifyOptions) -> List[CheckResult]:
    """依次运行全部恒等式"""
    results: List[CheckResult] = []
    for identity in IDENTITIES:
        results.extend(run_identity(identity.name, opts))
    failed = sum(1 for r in results if not r.ok)
    logger.info(f"自检完成: {len(results)} 项，失败 {failed} 项")
    return results


def identity_table() -> List[Tuple[str, str, str]]:
    return [(identity.name, identity.reference, identity.description) for identity in IDENTITIES]
