"""HTTP facade over the counting library.

The CLI talks to these endpoints through an in-process ASGI transport by
default, so the request/response models double as the CLI's wire format;
running a real server (uvicorn) exposes the same surface over the
network.
"""

from __future__ import annotations

from fastapi import FastAPI

from .routes import router

__all__ = ["create_app", "app"]


def create_app() -> FastAPI:
    app = FastAPI(title="multicount", version="0.1.0")
    app.include_router(router)
    return app


app = create_app()
