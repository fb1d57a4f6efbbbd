# app/paths/svg_renderer.py
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from jinja2 import Environment, FileSystemLoader

from app.config import (
    LOG_FORMAT,
    LOG_LEVEL,
    SVG_GRID_COLOR,
    SVG_INFINITY_HEIGHT,
    SVG_MARGIN,
    SVG_SCALE,
    SVG_STROKE_COLOR,
    SVG_STROKE_WIDTH,
    TEMPLATE_DIR,
)
from app.paths.lattice_path import LatticePath

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


def _fmt(x: float) -> str:
    # 固定小数位，保证输出逐字节一致
    return f"{x:.3f}"


class PathDiagramRenderer:
    def __init__(self, scale: int = SVG_SCALE):
        """
        初始化格路SVG渲染器

        Args:
            scale: 每单位长度的像素数
        """
        if scale <= 0:
            raise ValueError(f"缩放因子必须为正: {scale}")
        self.scale = scale
        self.template_dir = TEMPLATE_DIR
        self.env = Environment(loader=FileSystemLoader(str(self.template_dir)), autoescape=True)

    def _layout(self, paths: Sequence[LatticePath]) -> Dict[str, Any]:
        columns = [c for p in paths for c, _ in p.vertices()]
        finite = [h for p in paths for _, h in p.vertices() if h is not None]
        max_col = max(columns, default=0)
        top_height = max([Fraction(0)] + finite) + SVG_INFINITY_HEIGHT
        low_height = min([Fraction(0)] + finite)
        width = 2 * SVG_MARGIN + max_col * self.scale
        height = 2 * SVG_MARGIN + float(top_height - low_height) * self.scale

        def x_of(column: int) -> float:
            return SVG_MARGIN + column * self.scale

        def y_of(h: Optional[Fraction]) -> float:
            value = top_height if h is None else h
            return SVG_MARGIN + float(top_height - value) * self.scale

        rendered = []
        for p in paths:
            points = " ".join(f"{_fmt(x_of(c))},{_fmt(y_of(h))}" for c, h in p.vertices())
            rendered.append({"kind": p.kind.value, "start": p.start, "end": p.end, "points": points})
        return {
            "width": _fmt(width),
            "height": _fmt(height),
            "left": _fmt(x_of(0)),
            "right": _fmt(x_of(max_col)),
            "top": _fmt(y_of(None)),
            "bottom": _fmt(y_of(low_height)),
            "label_y": _fmt(y_of(low_height) + 14),
            "baseline": _fmt(y_of(Fraction(0))),
            "grid_columns": [_fmt(x_of(c)) for c in range(max_col + 1)],
            "column_labels": [{"x": _fmt(x_of(c)), "text": c} for c in range(max_col + 1)],
            "paths": rendered,
        }

    def render(self, paths: Sequence[LatticePath], title: str = "lecture hall paths") -> str:
        """渲染路径族为SVG文本"""
        template = self.env.get_template("path_diagram.svg.j2")
        return template.render(
            title=title,
            grid_color=SVG_GRID_COLOR,
            stroke_color=SVG_STROKE_COLOR,
            stroke_width=SVG_STROKE_WIDTH,
            **self._layout(paths),
        )

    def save(self, paths: Sequence[LatticePath], output_path: Union[str, Path], title: str = "lecture hall paths") -> str:
        """渲染并写入文件，返回文件路径"""
        svg = self.render(paths, title)
        output_path = Path(output_path)
        with open(output_path, 'w', encoding='utf-8') as f:
            f.write(svg)
        logger.info(f"SVG已写入: {output_path}")
        return str(output_path)


def render_paths(paths: List[LatticePath], scale: int = SVG_SCALE) -> str:
    return PathDiagramRenderer(scale).render(paths)
