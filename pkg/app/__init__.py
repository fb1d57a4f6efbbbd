# app/__init__.py
# 讲堂表精确计算工具
