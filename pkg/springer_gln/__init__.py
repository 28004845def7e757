"""Generalized Springer correspondence for the symmetric space GL_N/O_N."""

__version__ = "0.1.0"
