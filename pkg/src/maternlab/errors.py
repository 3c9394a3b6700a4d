"""Exception and warning types shared across the package."""


class MaternlabError(Exception):
    """Base class for errors raised by this package."""


class ConditioningError(MaternlabError):
    """A Gram factorization hit a pivot at or below the conditioning floor.

    Attributes
    ----------
    pivot_index : int
        Zero-based index of the offending pivot.
    pivot_value : float
        The diagonal remainder that fell below the floor.
    floor : float
        The absolute threshold that was in force.
    """

    def __init__(self, pivot_index, pivot_value, floor, detail=""):
        self.pivot_index = int(pivot_index)
        self.pivot_value = float(pivot_value)
        self.floor = float(floor)
        msg = (
            f"factorization pivot {self.pivot_index} = {self.pivot_value:.6e} "
            f"at or below conditioning floor {self.floor:.6e}"
        )
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class QuadratureError(MaternlabError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class TruncationError(MaternlabError):
    """A spectral truncation cannot supply the requested number of modes."""


class InsufficientDataError(MaternlabError):
    """A rate fit was requested with fewer than two usable levels."""


class ConditioningWarning(UserWarning):
    """Diagonal jitter was applied to a Gram matrix before factorization."""
