"""Exception types raised across the package."""


class SparseCurveError(Exception):
    """Base class for all errors raised by sparsecurve."""


class BothConstantInAxis(SparseCurveError, ValueError):
    pass


class BothZero(SparseCurveError, ValueError):
    pass


class ZeroInput(SparseCurveError, ValueError):
    pass


class NotIsolating(SparseCurveError, ValueError):
    pass


class NotOnCurve(SparseCurveError, ValueError):
    pass


class SingularFiber(SparseCurveError, ValueError):
    pass


class FYZero(SparseCurveError, ValueError):
    """The curve polynomial does not depend on Y."""


FYIdenticallyZero = FYZero


class ResultantZero(SparseCurveError, ValueError):
    """Res(F, F_Y) vanishes identically: F is not squarefree in Y."""


class LengthMismatch(SparseCurveError, ValueError):
    pass


class OutsideInterval(SparseCurveError, ValueError):
    pass


class ExponentBudgetExceeded(SparseCurveError, ValueError):
    pass


class NoDependence(SparseCurveError, ValueError):
    pass


class ParseError(SparseCurveError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ZeroF(SparseCurveError, ValueError):
    pass
