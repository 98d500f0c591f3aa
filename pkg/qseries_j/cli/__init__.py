"""
Command-line interface components.
"""
