"""Command-line front end: sweep, minimize, branches, greens, t00, verify, estimate."""
