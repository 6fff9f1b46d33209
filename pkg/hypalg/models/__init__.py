"""Pydantic schemas for the JSON forms emitted by the CLI and the API."""
