"""Exact construction of ADE root systems from the translation quiver Γ̂."""

__version__ = "1.0.0"
