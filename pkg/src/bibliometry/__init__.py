"""Bibliometric indicators over windowed conference-paper corpora."""

__version__ = "0.1.0"
