"""Shared exception types."""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class CapacityError(ValueError):
    """Input exceeds a hard desk-scale cap."""
