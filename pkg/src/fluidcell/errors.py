"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A configuration value violates its constraints (e.g. eta <= 2)."""


class DomainError(ValueError):
    """An input lies outside the validity interval of a formula."""


class SingularSinrError(ArithmeticError):
    """SINR denominator is zero (or would be negative)."""


class InfeasibleCellError(Exception):
    """CDMA downlink load reached or exceeded pole capacity (load >= 1)."""

    def __init__(self, load: float):
        self.load = load
        super().__init__(f"cell infeasible: load {load:.6g} >= 1 (pole capacity exceeded)")


class ResampleRequired(Exception):
    """A sampled mobile landed exactly on a BS; the caller must re-draw."""
