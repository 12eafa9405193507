"""Exception types shared across the package."""


class MinkplanarError(Exception):
    """Base class for all package errors."""


class InputError(MinkplanarError):
    """Raised when a caller hands us malformed or out-of-contract input."""


class GeometryError(MinkplanarError):
    """Raised when a coordinate route violates general-position requirements."""


class LayoutError(MinkplanarError):
    """Raised when no usable coordinates can be produced for a drawing."""
