"""Items service demo: one description, served, invoked and documented."""
