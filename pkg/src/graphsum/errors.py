"""Exception types raised by the summarization pipeline."""


class GraphsumError(Exception):
    """Base class for all graphsum errors."""


class EmptyDocumentError(GraphsumError):
    """Input text contains no sentences (empty or whitespace only)."""


class UnknownTermError(GraphsumError):
    """A sentence token has no vocabulary id (internal consistency violation)."""


class DimensionMismatchError(GraphsumError):
    """Two term vectors of different lengths were compared."""


class EmptyReferenceError(GraphsumError):
    """Every reference summary produced zero grams; scoring is impossible."""
