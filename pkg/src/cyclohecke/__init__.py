"""Exact computations in G(r,1,n) and its cyclotomic Hecke algebras."""

__version__ = "0.1.0"
