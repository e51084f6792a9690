"""
Exception hierarchy for the linear representation toolkit.

Every exception carries the exit code the CLI reports for it.
"""


class LinRepError(Exception):
    """Base class for all toolkit errors"""
    exit_code = 70


class InputError(LinRepError):
    """Raised when user-supplied input is malformed"""
    exit_code = 2


class FunctionParseError(InputError):
    """Raised when a function or integer list cannot be parsed"""
    pass


class DomainClosureError(InputError):
    """Raised when an image falls outside {0, ..., n-1}"""

    def __init__(self, index: int, image: int, n: int):
        self.index = index
        self.image = image
        self.n = n
        super().__init__(
            f"image at index {index} is {image}, outside the domain "
            f"{{0, ..., {n - 1}}} ({image} >= {n})"
        )


class DimensionMismatchError(InputError):
    """Raised when vector or matrix dimensions disagree"""
    pass


class EnumerationCapError(InputError):
    """Raised when an exhaustive enumeration would exceed the configured cap"""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        self.count = n ** n
        super().__init__(
            f"refusing to enumerate all functions on n={n}: {self.count} functions "
            f"would be generated (enumeration cap is n <= {cap})"
        )


class ChainViolationError(LinRepError):
    """Raised when an explicit evaluation point breaks the strict ordering chain"""
    exit_code = 3

    def __init__(self, x: int, violation: str):
        self.x = x
        self.violation = violation
        super().__init__(f"x={x} violates the strict chain: {violation}")


class InvariantError(LinRepError):
    """Raised when an internal algebraic invariant fails (indicates a bug)"""
    exit_code = 70
