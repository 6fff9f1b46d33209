"""Barred quaternion and left-barred octonion operators."""
