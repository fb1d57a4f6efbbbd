# app/utils/__init__.py
# 通用工具模块
