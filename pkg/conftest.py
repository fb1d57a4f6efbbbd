# conftest.py
# 让 tests/ 可以直接导入 main 与 app 包
