"""Service layer: facades composing the physics modules for the CLI."""
