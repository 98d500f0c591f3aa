"""
qseries-j

Exact truncated q-series for the generalized Ramanujan J functions: the
multisection of (q^(1/N))_inf / (q^N)_inf, their theta-ratio closed forms,
the product of all J's, and a suite of identity checks.
"""

__version__ = "0.1.0"
