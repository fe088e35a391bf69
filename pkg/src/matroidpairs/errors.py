"""Exceptions raised by the matroid library and the search pipeline."""


class MatroidError(ValueError):
    """Base class for all errors raised by matroidpairs."""


class UnsupportedSizeError(MatroidError):
    """A ground set or matrix dimension exceeds what the library handles."""


class NotATriangleError(MatroidError):
    """A set handed to a triangle operation is not a triangle."""


class NonSimpleMatroidError(MatroidError):
    """An operation that needs a simple matroid got loops or parallel pairs."""


class NonBinaryUniformError(MatroidError):
    """The requested uniform matroid has no GF(2) representation."""


class UnknownMatroidError(MatroidError):
    """A named matroid id could not be resolved."""


class UnknownLabelError(MatroidError):
    """A label does not belong to the ground set."""


class CatalogueFormatError(MatroidError):
    """An MCAT file or an encoded matroid could not be parsed."""


class GenerationOrderError(MatroidError):
    """A catalogue size was requested before its predecessor was complete."""


class MissingPrerequisiteError(MatroidError):
    """A pipeline step needs an output that has not been produced yet."""


class InvalidCertificateError(MatroidError):
    """A move certificate fails one of its structural conditions."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        message = f"certificate condition failed: {condition}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class UnknownCertificateKindError(MatroidError):
    """A certificate names a move kind that is not implemented."""
