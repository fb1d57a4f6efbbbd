# app/partitions/__init__.py
# 整数分拆与斜形状模块
