"""Laminations on free groups as horizon-truncated laminary languages"""

__version__ = "0.1.0"
