# app/exactmath/__init__.py
# 精确算术内核模块
