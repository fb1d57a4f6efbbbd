# app/lhcomb/__init__.py
# 讲堂分拆与反讲堂组合模块
