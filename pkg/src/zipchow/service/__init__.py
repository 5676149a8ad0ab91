"""HTTP service layer: pydantic models, handlers, FastAPI app."""

from .app import app

__all__ = ["app"]
