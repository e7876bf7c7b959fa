"""Associated groups and homology of finite (symmetric) quandles."""
