"""Self-similar groups, Röver–Nekrashevych groups and germ witnesses."""

__version__ = "0.1.0"
