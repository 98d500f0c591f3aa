"""
Test suite for qseries-j.
"""
