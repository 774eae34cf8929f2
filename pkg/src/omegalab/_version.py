"""Package version, importable without pulling in the full API."""

__version__ = "0.1.0"
