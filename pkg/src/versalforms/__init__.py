"""Versal families of reductive groups evaluated at field-valued points."""

__version__ = "0.1.0"
