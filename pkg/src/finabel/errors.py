"""Exceptions shared across the library."""

__all__ = ["BoundExceededError", "NonInvertibleError"]


class BoundExceededError(RuntimeError):
    """A computation was refused because it exceeds a configured resource bound.

    The message always names the offending quantity and the bound, so that a
    failing sweep can be diagnosed from the error text alone.
    """


class NonInvertibleError(ValueError):
    """Convolution inverse requested for a function that vanishes on the
    trivial group (the non-units of the algebra)."""
