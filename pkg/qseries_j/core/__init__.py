"""
Series arithmetic, J-function computation and identity checks.
"""
