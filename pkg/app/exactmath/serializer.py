# app/exactmath/serializer.py
import json
from fractions import Fraction
from typing import Any, Dict, List

from app.config import JSON_SCHEMA_VERSION
from app.exactmath.laurent import LaurentPoly
from app.exactmath.qseries import QSeries
from app.exactmath.rational import format_rational


def laurent_to_json(p: LaurentPoly) -> List[List[Any]]:
    """Laurent多项式的规范JSON形式：[[u指数, v指数, "系数"], ...]"""
    return p.to_json()


def laurent_from_json(data: List[List[Any]]) -> LaurentPoly:
    return LaurentPoly({(int(i), int(j)): int(c) for i, j, c in data})


def qseries_to_json(s: QSeries) -> Dict[str, Any]:
    """只列出非零系数，按q次数排序"""
    return {
        "cap": s.cap,
        "coeffs": [
            {"q": d, "terms": laurent_to_json(a)}
            for d, a in enumerate(s.coeffs) if a
        ],
    }


def qseries_from_json(data: Dict[str, Any]) -> QSeries:
    cap = int(data["cap"])
    coeffs: List[LaurentPoly] = [LaurentPoly.zero()] * (cap + 1)
    for item in data["coeffs"]:
        coeffs[int(item["q"])] = laurent_from_json(item["terms"])
    return QSeries(cap, coeffs)


def qseries_to_tsv(s: QSeries) -> str:
    """电子表格友好的系数表"""
    lines = ["q_exp\tu_exp\tv_exp\tcoeff"]
    for d, i, j, c in s.terms():
        lines.append(f"{d}\t{i}\t{j}\t{c}")
    return "\n".join(lines)


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, QSeries):
        return qseries_to_json(obj)
    if isinstance(obj, LaurentPoly):
        return laurent_to_json(obj)
    raise TypeError(f"无法序列化的对象: {type(obj).__name__}")


def dumps(payload: Dict[str, Any]) -> str:
    """带版本号的确定性JSON输出"""
    document = {"schema": JSON_SCHEMA_VERSION}
    document.update(payload)
    return json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True, default=_default)
