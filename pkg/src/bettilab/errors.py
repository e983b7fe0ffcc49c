"""Exception types shared across the package."""


class InvariantError(AssertionError):
    """An internal mathematical invariant failed on actual data.

    Carries the name of the violated invariant so the CLI can report it
    and exit with status 1.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)


class OracleSizeError(RuntimeError):
    """Brute-force resolution exceeded its size cap (oracle path only)."""


class TateDimensionError(RuntimeError):
    """Solution space of the exterior-module constraints has unexpected
    dimension; the input is reported rather than truncated."""


class SkewNormalizationError(RuntimeError):
    """No invertible change of basis makes the matrix of linear forms
    skew-symmetric."""
