# app/config.py
import os
from pathlib import Path

# 项目基础路径
BASE_DIR = Path(__file__).resolve().parent.parent

# 模板目录（SVG路径图）
TEMPLATE_DIR = BASE_DIR / "app" / "paths" / "templates"

# 日志配置
LOG_LEVEL = os.environ.get("LH_LOG_LEVEL", "INFO").upper()
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# 级数截断
DEFAULT_CAP = 12  # 默认q次数上限

# 默认有理参数（"p/q"字符串，避免浮点污染）
DEFAULT_Q = "1/3"
DEFAULT_A = "-1/10"
DEFAULT_B = "-1/7"
DEFAULT_U = "1/5"
DEFAULT_V = "2/7"

# 线性泛函与Selberg型积分
FUNCTIONAL_TERMS = 80  # 一元泛函部分和项数
SELBERG_TERMS = 50  # n重q积分每个坐标的项数
SELBERG_TOLERANCE = "1e-15"  # 认证误差上限

# 输出格式
JSON_SCHEMA_VERSION = 1

# SVG渲染配置
SVG_SCALE = 60  # 每单位长度像素
SVG_MARGIN = 30  # 边距
SVG_INFINITY_HEIGHT = 3  # "无穷远"终点画到的额外高度
SVG_STROKE_COLOR = "#1F4E79"
SVG_GRID_COLOR = "#CCCCCC"
SVG_STROKE_WIDTH = 2

# 并发设置
_threads = os.environ.get("LH_THREADS", "")
MAX_WORKERS = max(1, int(_threads)) if _threads.isdigit() else (os.cpu_count() or 4)  # 最大工作线程数
