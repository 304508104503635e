"""HTTP service exposing the core computations."""

from .app import create_app

__all__ = ["create_app"]
