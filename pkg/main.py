# main.py
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from app.config import (
    DEFAULT_A,
    DEFAULT_B,
    DEFAULT_CAP,
    DEFAULT_Q,
    FUNCTIONAL_TERMS,
    LOG_FORMAT,
    LOG_LEVEL,
    SELBERG_TOLERANCE,
    SVG_SCALE,
)
from app.exactmath.rational import format_rational, parse_rational
from app.exactmath.serializer import dumps, qseries_to_tsv
from app.lhcomb.bounded_sequence import BoundedSequence, Variant
from app.lhcomb.closed_forms import genfun_closed
from app.lhcomb.sequence_enumerator import enum_set, genfun_enum
from app.partitions.partition import SkewShape, parse_partition
from app.paths.lattice_path import LatticePath, PathKind, path_from_sequence, path_weight, sequence_from_path
from app.paths.path_families import family_weight, paths_to_tableau, tableau_to_paths
from app.paths.svg_renderer import PathDiagramRenderer
from app.qjacobi.functional import normalized_functional
from app.qjacobi.moments import moment_matrix, mu_mixed
from app.qjacobi.params import SpecParams
from app.qjacobi.univariate import UniPoly, little_q_jacobi, recurrence_coefficients
from app.tableaux.enumerator import count_tableaux, list_tableaux, ls_series
from app.tableaux.tableau import NAMED_TYPES, OrderType, Tableau, tableau_from_json, tableau_to_json, validate
from app.verify.identity_registry import (
    IDENTITIES,
    CheckResult,
    VerifyOptions,
    identity_table,
    run_identity,
    run_selftest,
)

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)

# 取值可能以 '-' 开头的参数，需要与值合并成 --a=-1/10
RATIONAL_FLAGS = {"--q", "--a", "--b", "--u", "--v", "--tol"}


class LectureHallToolkit:
    """命令行各动词的执行器：每个方法返回 (输出文本, 是否全部通过)"""

    def __init__(self, as_tsv: bool = False):
        self.as_tsv = as_tsv

    def enum(self, variant: Variant, n: int, k: int, cap: int) -> Tuple[str, bool]:
        members = enum_set(variant, n, k, cap)
        logger.info(f"{variant.value}_{{{n},{k}}} 中元素和 ≤ {cap} 的成员: {len(members)} 个")
        if self.as_tsv:
            lines = ["entries\tsize\tu_exp\tv_exp"]
            for seq in members:
                size, u_exp, v_exp = seq.statistics()
                lines.append(f"{','.join(map(str, seq.entries))}\t{size}\t{u_exp}\t{v_exp}")
            return "\n".join(lines), True
        return dumps({
            "variant": variant.value, "n": n, "k": k, "cap": cap,
            "count": len(members),
            "members": [list(seq.entries) for seq in members],
        }), True

    def genfun(self, variant: Variant, n: int, k: int, cap: int, closed: bool) -> Tuple[str, bool]:
        series = genfun_closed(variant, n, k, cap) if closed else genfun_enum(variant, n, k, cap)
        if self.as_tsv:
            return qseries_to_tsv(series), True
        return dumps({
            "variant": variant.value, "n": n, "k": k,
            "method": "closed" if closed else "enum",
            "series": series,
        }), True

    def tableaux(self, shape: SkewShape, order_type: OrderType, cap: int, mode: str) -> Tuple[str, bool]:
        header = {"shape": list(shape.outer.parts), "inner": list(shape.inner.parts),
                  "n": order_type.n, "type": order_type.name, "cap": cap}
        if mode == "count":
            count = count_tableaux(shape, order_type, cap)
            return (str(count) if self.as_tsv else dumps({**header, "count": count})), True
        if mode == "list":
            tableaux = list_tableaux(shape, order_type, cap)
            if self.as_tsv:
                lines = ["size\tentries"]
                lines += [f"{t.size}\t{';'.join(','.join(map(str, row)) for row in t.rows())}" for t in tableaux]
                return "\n".join(lines), True
            return dumps({**header, "tableaux": [tableau_to_json(t) for t in tableaux]}), True
        series = ls_series(shape, order_type, cap)
        return (qseries_to_tsv(series) if self.as_tsv else dumps({**header, "series": series})), True

    def _paths_document(self, paths: List[LatticePath], source: Dict[str, Any]) -> Dict[str, Any]:
        q_exp, monomial = family_weight(paths)
        return {**source, "paths": [p.to_json() for p in paths], "weight": {"q": q_exp, "uv": monomial}}

    def paths_from_sequence(self, seq: BoundedSequence, svg: Optional[str], scale: int) -> Tuple[str, bool]:
        path = path_from_sequence(seq)
        back = sequence_from_path(path)
        ok = back == seq
        if not ok:
            logger.error(f"路径无法还原为原序列: {seq.entries} -> {back.entries}")
        if svg:
            PathDiagramRenderer(scale).save([path], svg, title=f"{seq.variant.value} {list(seq.entries)}")
        q_exp, monomial = path_weight(path)
        return dumps({
            "sequence": seq.to_json(),
            "path": path.to_json(),
            "vertices": [[c, None if h is None else format_rational(h)] for c, h in path.vertices()],
            "weight": {"q": q_exp, "uv": monomial},
            "roundtrip": ok,
        }), ok

    def paths_from_tableau(self, t: Tableau, kind: PathKind, svg: Optional[str], scale: int) -> Tuple[str, bool]:
        paths = tableau_to_paths(t, kind)
        ok = paths_to_tableau(paths, t.shape, t.type.n, kind) == t
        if not ok:
            logger.error(f"路径族无法还原为原表: {tableau_to_json(t)}")
        if svg:
            PathDiagramRenderer(scale).save(paths, svg, title=f"{t.shape} n={t.type.n}")
        document = self._paths_document(paths, {"tableau": tableau_to_json(t)})
        document["roundtrip"] = ok
        return dumps(document), ok

    def qjacobi(self, action: str, n: int, params: SpecParams, terms: int) -> Tuple[str, bool]:
        header = {"action": action, "n": n, "params": params.to_json()}
        if action == "poly":
            return dumps({**header, "coefficients": little_q_jacobi(n, params).to_json()}), True
        if action == "recurrence":
            rows = [recurrence_coefficients(m, params).to_json() for m in range(n + 1)]
            return dumps({**header, "coefficients": rows}), True
        if action == "moments":
            return dumps({
                **header,
                "mu": [[format_rational(x) for x in row] for row in moment_matrix(n + 1, params)],
                "nu": [[format_rational(x) for x in row] for row in moment_matrix(n + 1, params, dual=True)],
            }), True
        # functional: L(x^n)/L(1) 与 μ_{n,0} 比较
        monomial = UniPoly.monomial(n)
        value = normalized_functional(monomial, params, terms)
        expected = mu_mixed(n, 0, params)
        ok = value.contains(expected)
        return dumps({**header, "terms": terms, "functional": value.to_json(),
                      "moment": format_rational(expected), "ok": ok}), ok

    def report(self, results: List[CheckResult], as_json: bool) -> Tuple[str, bool]:
        ok = all(r.ok for r in results)
        if as_json:
            return dumps({"ok": ok, "results": [r.to_json() for r in results]}), ok
        return "\n".join(r.line() for r in results), ok

    def verify(self, name: str, opts: VerifyOptions, as_json: bool) -> Tuple[str, bool]:
        return self.report(run_identity(name, opts), as_json)

    def selftest(self, opts: VerifyOptions, as_json: bool) -> Tuple[str, bool]:
        return self.report(run_selftest(opts), as_json)


def _normalize_argv(argv: Sequence[str]) -> List[str]:
    tokens = list(argv)
    result: List[str] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if token in RATIONAL_FLAGS and i + 1 < len(tokens) and tokens[i + 1].startswith("-"):
            result.append(f"{token}={tokens[i + 1]}")
            i += 2
            continue
        result.append(token)
        i += 1
    return result


def _add_format(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON输出（默认）")
    group.add_argument("--tsv", action="store_true", help="TSV输出")


def _add_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", default=None, help=f"有理参数 q，0<q<1（默认 {DEFAULT_Q}）")
    parser.add_argument("--a", default=None, help=f"有理参数 a（默认 {DEFAULT_A}）")
    parser.add_argument("--b", default=None, help=f"有理参数 b（默认 {DEFAULT_B}）")
    parser.add_argument("--u", default=None, help="由 (u, v) 给出 a=-uv, b=-u/v")
    parser.add_argument("--v", default=None, help="与 --u 一起使用")


def _add_shape(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument("--shape", required=required, help="外分拆，如 6,6,4,3")
    parser.add_argument("--inner", default=None, help="内分拆，如 3,1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lh", description="讲堂表与讲堂分拆的精确计算与恒等式校验工具")
    verbs = parser.add_subparsers(dest="verb", required=True)

    enum = verbs.add_parser("enum", help="枚举截断讲堂集合")
    enum.add_argument("--variant", required=True, help="L | Lbar | AL | ALbar")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--k", type=int, required=True)
    enum.add_argument("--cap", type=int, default=DEFAULT_CAP, help="元素和上限")
    _add_format(enum)

    genfun = verbs.add_parser("genfun", help="截断讲堂集合的生成函数")
    genfun.add_argument("--variant", required=True, help="L | Lbar | AL | ALbar")
    genfun.add_argument("--n", type=int, required=True)
    genfun.add_argument("--k", type=int, required=True)
    genfun.add_argument("--cap", type=int, default=DEFAULT_CAP, help="q次数上限")
    method = genfun.add_mutually_exclusive_group()
    method.add_argument("--closed", action="store_true", help="乘积公式（默认）")
    method.add_argument("--enum", action="store_true", help="逐个枚举")
    _add_format(genfun)

    tableaux = verbs.add_parser("tableaux", help="讲堂表的级数、计数与列表")
    _add_shape(tableaux, required=True)
    tableaux.add_argument("--n", type=int, required=True)
    tableaux.add_argument("--type", default="ge-gt", choices=sorted(NAMED_TYPES))
    tableaux.add_argument("--cap", type=int, default=DEFAULT_CAP, help="元素和上限")
    mode = tableaux.add_mutually_exclusive_group()
    mode.add_argument("--series", action="store_true", help="生成函数（默认）")
    mode.add_argument("--count", action="store_true", help="计数")
    mode.add_argument("--list", action="store_true", help="列出全部表")
    _add_format(tableaux)

    paths = verbs.add_parser("paths", help="序列或表对应的格路（族）")
    source = paths.add_mutually_exclusive_group(required=True)
    source.add_argument("--from-alhc", help="反讲堂组合 AL_{n,k} 的元素")
    source.add_argument("--from-lhp", help="截断讲堂分拆 L_{n,k} 的元素")
    source.add_argument("--from-tableau", help="(≥,>) 型讲堂表的 JSON 文件")
    paths.add_argument("--n", type=int, default=None)
    paths.add_argument("--k", type=int, default=None, help="序列长度，默认为元素个数")
    paths.add_argument("--kind", default="NW", help="表对应的路径类型 NW | NE")
    paths.add_argument("--svg", default=None, help="SVG输出路径")
    paths.add_argument("--scale", type=int, default=SVG_SCALE, help="SVG缩放因子")
    paths.add_argument("--json", action="store_true", help="JSON输出（默认）")

    qjacobi = verbs.add_parser("qjacobi", help="little q-Jacobi 多项式、递推、矩与泛函")
    qjacobi.add_argument("action", choices=["poly", "recurrence", "moments", "functional"])
    qjacobi.add_argument("--n", type=int, required=True)
    qjacobi.add_argument("--terms", type=int, default=FUNCTIONAL_TERMS, help="泛函部分和项数")
    _add_params(qjacobi)
    qjacobi.add_argument("--json", action="store_true", help="JSON输出（默认）")

    verify = verbs.add_parser("verify", help="校验一个恒等式")
    verify.add_argument("identity", choices=[identity.name for identity in IDENTITIES])
    _add_verify_options(verify)

    selftest = verbs.add_parser("selftest", help="运行全部恒等式的回归测试")
    selftest.add_argument("--list", action="store_true", help="列出恒等式与出处")
    _add_verify_options(selftest)
    return parser


def _add_verify_options(parser: argparse.ArgumentParser) -> None:
    _add_shape(parser)
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--cap", type=int, default=None)
    parser.add_argument("--type", default=None, choices=sorted(NAMED_TYPES))
    parser.add_argument("--variant", default=None, help="L | Lbar | AL | ALbar")
    _add_params(parser)
    parser.add_argument("--terms", type=int, default=None, help="q积分每个坐标的项数 K")
    parser.add_argument("--tol", default=SELBERG_TOLERANCE, help="认证误差上限")
    parser.add_argument("--size", type=int, default=None, help="矩矩阵阶数")
    parser.add_argument("--draws", type=int, default=None, help="随机抽样次数")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--quick", action="store_true", help="较小的默认测试集")
    parser.add_argument("--json", action="store_true", help="JSON输出（默认为逐行 PASS/FAIL）")


def _params(args: argparse.Namespace) -> SpecParams:
    q = DEFAULT_Q if args.q is None else args.q
    if args.u is not None or args.v is not None:
        if args.u is None or args.v is None or args.a is not None or args.b is not None:
            raise ValueError("--u/--v 必须同时给出，且不能与 --a/--b 混用")
        return SpecParams.from_uv(q, args.u, args.v)
    return SpecParams(
        parse_rational(q),
        parse_rational(DEFAULT_A if args.a is None else args.a),
        parse_rational(DEFAULT_B if args.b is None else args.b),
    )


def _shape(args: argparse.Namespace) -> Optional[SkewShape]:
    if args.shape is None:
        if args.inner is not None:
            raise ValueError("--inner 需要与 --shape 一起使用")
        return None
    return SkewShape(parse_partition(args.shape), parse_partition(args.inner))


def _entries(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ValueError(f"无法解析序列: {text!r}") from e


def _verify_options(args: argparse.Namespace) -> VerifyOptions:
    return VerifyOptions(
        shape=_shape(args),
        n=args.n,
        cap=args.cap,
        order_type=args.type,
        variant=Variant.parse(args.variant) if args.variant else None,
        # 未给出任何参数时由各恒等式选择默认参数
        params=_params(args) if any(getattr(args, k) is not None for k in "qabuv") else None,
        terms=args.terms,
        tol=args.tol,
        size=args.size,
        draws=args.draws,
        seed=args.seed,
        quick=args.quick,
    )


def _dispatch(toolkit: LectureHallToolkit, parser: argparse.ArgumentParser, args: argparse.Namespace) -> Tuple[str, bool]:
    # 输入格式错误走 parser.error（退出码2），其余异常由调用方处理
    try:
        if args.verb in ("enum", "genfun"):
            variant = Variant.parse(args.variant)
        elif args.verb == "tableaux":
            shape = _shape(args)
            order_type = OrderType.named(args.type, args.n)
        elif args.verb == "paths":
            if args.from_tableau:
                t = tableau_from_json(_load_json(args.from_tableau))
                if not validate(t):
                    parser.error(f"不是合法的讲堂表: {t.rows()}")
                kind = PathKind.parse(args.kind)
            else:
                variant = Variant.AL if args.from_alhc else Variant.L
                entries = _entries(args.from_alhc or args.from_lhp)
                if args.n is None:
                    parser.error("--from-alhc/--from-lhp 需要 --n")
                if args.k is not None and args.k != len(entries):
                    parser.error(f"--k={args.k} 与元素个数 {len(entries)} 不符")
                seq = BoundedSequence(variant, args.n, entries)
        elif args.verb == "qjacobi":
            params = _params(args)
        elif args.verb in ("verify", "selftest"):
            opts = _verify_options(args)
            parse_rational(args.tol)
    except (ValueError, TypeError) as e:
        parser.error(str(e))

    if args.verb == "enum":
        return toolkit.enum(variant, args.n, args.k, args.cap)
    if args.verb == "genfun":
        return toolkit.genfun(variant, args.n, args.k, args.cap, closed=not args.enum)
    if args.verb == "tableaux":
        mode = "count" if args.count else "list" if args.list else "series"
        return toolkit.tableaux(shape, order_type, args.cap, mode)
    if args.verb == "paths":
        if args.from_tableau:
            return toolkit.paths_from_tableau(t, kind, args.svg, args.scale)
        return toolkit.paths_from_sequence(seq, args.svg, args.scale)
    if args.verb == "qjacobi":
        return toolkit.qjacobi(args.action, args.n, params, args.terms)
    if args.verb == "verify":
        return toolkit.verify(args.identity, opts, args.json)
    if args.list:
        return "\n".join("\t".join(row) for row in identity_table()), True
    return toolkit.selftest(opts, args.json)


def _load_json(path: str) -> Dict[str, Any]:
    with open(Path(path), 'r', encoding='utf-8') as f:
        return json.load(f)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    命令行入口：0 全部通过，1 有 FAIL 或运行时错误，2 参数错误

    Args:
        argv: 参数列表，默认取 sys.argv[1:]
    """
    parser = build_parser()
    tokens = _normalize_argv(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(tokens)
        toolkit = LectureHallToolkit(as_tsv=getattr(args, "tsv", False))
        text, ok = _dispatch(toolkit, parser, args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except Exception as e:
        logger.error(f"执行 lh {' '.join(tokens)} 失败: {e}")
        return 1
    print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(run())
