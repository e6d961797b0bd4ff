"""Text formats and compiled-in fixtures."""
