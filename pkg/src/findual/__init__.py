"""Finite-model verification kernel for contact algebras, de Vries morphisms
and the dualities around them."""

__version__ = "0.1.0"
