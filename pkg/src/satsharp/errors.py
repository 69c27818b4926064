class InputError(ValueError):
    """Invalid arguments or malformed graph data."""


class GraphFormatError(InputError):
    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")


class CapabilityError(RuntimeError):
    """Request exceeds a declared size cap."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; always a bug."""
