"""Euler elements of real simple Lie algebras, orthogonal pairs, and the
central elements they produce."""

__version__ = "0.1.0"
