"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A family, arrangement, or operation parameter is out of range."""


class SizeRefusalError(ValueError):
    """The requested instance is too large for the chosen code path."""


class FormatError(ValueError):
    """An input file or payload does not parse as a labeled edge list."""
