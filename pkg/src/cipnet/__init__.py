"""Core-intermediate-peripheral classification of network nodes."""

__version__ = "1.0.0"
