"""Comparison counting for MergeSort: exact worst and best cases, generators, recursion trees."""

__version__ = "0.1.0"
