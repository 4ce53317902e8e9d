"""Shared exception and warning types."""


class DomainError(ValueError):
    """An evaluation left the domain where the distribution math is defined.

    Raised for inputs that pass basic range validation but make an
    expression numerically meaningless, e.g. a vanishing ``B**2`` in the
    ratio cdf or a discriminant that is negative beyond the rounding
    tolerance in the inverse.
    """


class ApproximationWarning(UserWarning):
    """A coefficient of variation is large enough that the normal-ratio
    approximation may lose accuracy (above 0.2, the largest value the
    accuracy of the approximation has been checked at)."""
