# app/utils/parallel.py
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from app.config import LOG_FORMAT, LOG_LEVEL, MAX_WORKERS

# 设置日志
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], max_workers: Optional[int] = None) -> List[R]:
    """
    并行计算并保持输入顺序

    Args:
        func: 纯函数
        items: 输入序列
        max_workers: 线程数，默认取 LH_THREADS
    """
    items = list(items)
    workers = max_workers or MAX_WORKERS
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug(f"使用 {workers} 个线程处理 {len(items)} 个任务")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
