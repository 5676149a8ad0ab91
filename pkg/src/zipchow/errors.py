"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A user-supplied parameter is invalid.

    Carries the parameter name so front ends (CLI flags, HTTP fields) can
    point at the offending input.
    """

    def __init__(self, param: str, message: str):
        super().__init__(f"{param}: {message}")
        self.param = param
        self.message = message


class MatrixCapExceeded(RuntimeError):
    """A relation matrix is larger than the configured safety cap."""

    def __init__(self, rows: int, cols: int, cap: int):
        super().__init__(
            f"matrix of size {rows}x{cols} exceeds the cap of {cap}x{cap} "
            f"(override with the ZIPCHOW_MATRIX_CAP environment variable)"
        )
        self.rows = rows
        self.cols = cols
        self.cap = cap


class DecompositionError(RuntimeError):
    """A polynomial expected to be an integer combination of orbit sums is not.

    This signals an internal inconsistency (a basis bug), not a bad input.
    """
