# app/tableaux/__init__.py
# 讲堂表枚举与行列式公式模块
