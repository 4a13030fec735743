"""Unit conventions and shared numerical helpers."""
