# 测试
