# app/qjacobi/__init__.py
# 小q-Jacobi多项式与矩模块
