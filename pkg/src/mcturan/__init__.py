"""Exact desk-scale tools for multicolor Turán numbers ex_k(n, H)."""

__version__ = "0.1.0"
