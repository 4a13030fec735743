"""Closed-form zero-point energy, angular momentum and winding number."""
