"""Exception types raised across the package."""


class ZetaStripError(Exception):
    """Base class for all package errors."""


class DegenerateSeries(ZetaStripError):
    pass


class InvalidOrder(ZetaStripError):
    pass


class PoleAt(ZetaStripError):
    def __init__(self, point, msg=None):
        self.point = point
        super().__init__(msg or f"pole at {point}")


class OutOfAsymptoticRange(ZetaStripError):
    pass


class TooCloseToLatticePoint(ZetaStripError):
    pass


class QuadratureFailure(ZetaStripError):
    def __init__(self, msg, estimate=None, error=None):
        self.estimate = estimate
        self.error = error
        super().__init__(msg)


class NearSingularU(ZetaStripError):
    pass


class RegimeViolation(ZetaStripError):
    """Input lies outside the parameter range a formula was derived for."""

    def __init__(self, method, condition, msg=None):
        self.method = method
        self.condition = condition
        super().__init__(msg or f"{method}: requires {condition}")


class PrecisionMismatch(ZetaStripError):
    pass


class SumCapExceeded(ZetaStripError):
    pass
