"""Translations between barred operators and real or complex matrices."""
