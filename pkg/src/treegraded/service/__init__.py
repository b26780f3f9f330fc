"""HTTP service: FastAPI app plus its request models."""

from .app import app

__all__ = ["app"]
