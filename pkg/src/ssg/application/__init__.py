"""Application layer: services, commands and report schemas."""
