"""Maintenance scripts for hypalg."""
