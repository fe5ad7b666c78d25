"""Exact computations around tame local Galois groups over Q."""

__version__ = "0.1.0"
