"""Test suite for hypalg."""
