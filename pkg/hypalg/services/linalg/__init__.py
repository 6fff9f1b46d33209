"""Exact rational linear algebra."""
