"""Morphosyntactic analysis and linting of controlled vocabularies."""

__version__ = "0.1.0"
