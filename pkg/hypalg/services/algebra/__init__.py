"""Exact quaternion, octonion and complex arithmetic."""
