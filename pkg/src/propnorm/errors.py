"""Semantic exception hierarchy shared by all propnorm modules."""


class PropnormError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(PropnormError, ValueError):
    """Inputs violate a contract: shape, domain, parse, or type problems."""


class ConstantColumnError(PropnormError):
    """Standardization asked for on a column with zero standard deviation."""


class ZeroDispersionError(PropnormError):
    """Joint proportional normalization asked for on an all-zero column."""


class DivisionByZeroError(PropnormError, ZeroDivisionError):
    """Ratio comparison with a zero denominator."""


class UndefinedInteriorityError(PropnormError):
    """Interiority index requested for a vector with zero total magnitude."""


class RangeOverflowError(PropnormError, OverflowError):
    """A transform produced a value beyond the representable float range."""


class SingularityError(PropnormError):
    """Density transformation at a point where the transform derivative is 0."""


class DegenerateFitError(PropnormError):
    """Slope regression attempted with fewer than two occupied bins."""


class DegenerateGraphError(PropnormError):
    """Similarity network requested for fewer than two data elements."""


class LabelsRequiredError(PropnormError):
    """Category labels are required but absent (or fewer than two categories)."""
