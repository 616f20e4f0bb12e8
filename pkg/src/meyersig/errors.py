"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed matrix, word, or data-file input."""


class UnsupportedGenusError(ValueError):
    """An operation needs a Meyer function of a genus for which none exists."""


class InfiniteOrderError(ValueError):
    """The signature class of a presentation has infinite order, so no
    Meyer function can be synthesized from it."""
