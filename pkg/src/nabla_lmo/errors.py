"""Exception types shared across the package."""


class DomainError(Exception):
    """A mathematically invalid request: bad input data, a violated
    precondition, or a quantity the underlying theory does not define."""


class ParseError(ValueError):
    """Malformed polynomial/series text or malformed input file."""
