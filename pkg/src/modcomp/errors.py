class GraphFormatError(ValueError):
    """Raised for malformed edge-list input; ``line`` is 1-based (0 = header/EOF)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class SizeGuardError(ValueError):
    """An exponential oracle was asked to run beyond its size limit."""
