"""Exception types shared across the toolkit."""


class WorkCapExceeded(RuntimeError):
    """A requested computation would exceed its configured work or memory cap.

    Raised instead of silently truncating or degrading the result.
    """


class ParseError(ValueError):
    """Syntax or semantic error in a test-function expression.

    ``offset`` is the byte offset into the source text at which the
    problem was detected.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.reason = message
        self.offset = offset


class QuadratureError(RuntimeError):
    """Adaptive quadrature could not certify the requested tolerance."""
