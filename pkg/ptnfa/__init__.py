"""Piecewise testability of regular languages given by finite automata."""
__version__ = "0.1.0"
