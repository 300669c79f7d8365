"""Exception hierarchy for the polynomial kernel."""


class KernelError(Exception):
    """Base class for all errors raised by polycert."""


class DimensionError(KernelError):
    """Exponent vectors of mismatched length were combined."""


class OrderMismatchError(KernelError):
    """Polynomials tagged with different monomial orders were combined."""


class EmptyPolynomialError(KernelError):
    """Leading term requested from the zero polynomial."""


class DomainError(KernelError):
    """Operation applied outside its coefficient/variable domain."""


class StructureError(KernelError):
    """Malformed recursive polynomial nesting."""


class FormatError(KernelError):
    """Bad textual or streamed input."""


class ParseError(FormatError):
    """Syntax error in polynomial text, with a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CertificateFormatError(FormatError):
    """Certificate file violates the documented layout."""
