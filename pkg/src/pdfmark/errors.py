"""Exception types raised by pdfmark."""


class PdfmarkError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedWavelet(PdfmarkError, ValueError):
    pass


class DimensionMismatch(PdfmarkError, ValueError):
    pass


class NonBinaryInput(PdfmarkError, ValueError):
    pass


class RegionTooSmall(PdfmarkError, ValueError):
    pass


class PlaneOutOfRange(PdfmarkError, ValueError):
    pass


class MalformedPdf(PdfmarkError):
    """The document could not be parsed.

    ``offset`` is the byte position where parsing failed, when known.
    """

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class UnsupportedCodec(PdfmarkError):
    pass


class DecodeError(PdfmarkError):
    pass
