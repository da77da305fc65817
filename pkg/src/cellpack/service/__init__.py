"""HTTP service wrapping the solver library."""

from .app import app, create_app

__all__ = ["app", "create_app"]
