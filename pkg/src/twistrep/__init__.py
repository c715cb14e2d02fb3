"""Exact construction and verification of braid, mapping class group and
free-group representations: Jones, Burau, Weil, Fibonacci dimension counts,
Fox/Magnus matrices and Long-Moody induction."""

__version__ = "0.1.0"
