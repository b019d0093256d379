"""Exception types raised by the kernel and the command line."""


class SchurkitError(Exception):
    """Base class for computation-domain errors (CLI exit status 1)."""


class WeightCapError(SchurkitError, ValueError):
    """An input or result exceeds the weight cap, or truncation makes a result unreliable."""


class ExpressionSyntaxError(SchurkitError, ValueError):
    """Malformed expression text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}" if text else message)

    def pointer(self) -> str:
        """The offending text with a caret under the error position."""
        return f"{self.text}\n{' ' * self.position}^"
