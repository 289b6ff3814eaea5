"""Exception types shared across the package."""


class LpaError(Exception):
    """Base class for domain errors (bad input, violated preconditions)."""


class GraphError(LpaError):
    """Malformed graph data or reference to an unknown vertex/edge."""


class ParseError(LpaError):
    """Syntax error in an expression, with a character position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.pos = pos
