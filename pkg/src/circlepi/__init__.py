"""Historical circle rules in exact arithmetic, measured against modern pi."""

__version__ = "0.1.0"
