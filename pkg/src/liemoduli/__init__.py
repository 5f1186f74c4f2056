"""Exact computational tools for families of Lie subalgebras and their moduli."""

__version__ = "0.1.0"
