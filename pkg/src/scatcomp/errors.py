"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration or CLI input (exit code 2)."""


class NumericalError(RuntimeError):
    """A numerical stage failed: singular solve, underflow, divergence (exit code 3)."""
