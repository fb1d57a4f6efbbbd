# app/verify/__init__.py
# 恒等式校验模块
