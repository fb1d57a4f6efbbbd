# app/paths/__init__.py
# 讲堂格路径模块
