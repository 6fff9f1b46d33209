"""Parsing and rendering helpers."""
