"""Exact symbolic toolkit for the two-parameter quantum McKay correspondence."""

__version__ = "0.1.0"
