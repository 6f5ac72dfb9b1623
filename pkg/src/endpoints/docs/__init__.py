"""Documented vocabulary and its interpreters (OpenAPI generation, forwarding)."""
