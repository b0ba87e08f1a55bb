"""Geometric crystals, geometric RSK and loop symmetric functions in exact arithmetic."""
__version__ = "0.1.0"
