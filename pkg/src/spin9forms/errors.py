"""Exception hierarchy shared by all modules."""


class SpinFormsError(Exception):
    """Base class for errors raised by spin9forms."""


class NonImaginaryInput(SpinFormsError, ValueError):
    pass


class BadIndexSet(SpinFormsError, ValueError):
    pass


class DimMismatch(SpinFormsError, ValueError):
    pass


class GradeMismatch(SpinFormsError, ValueError):
    pass


class OddSubset(SpinFormsError, ValueError):
    pass


class OddCoefficientRequested(SpinFormsError, ValueError):
    pass


class MixedShapes(SpinFormsError, ValueError):
    pass


class NotSkew(SpinFormsError, ValueError):
    pass


class Spin7HasNoInvolutions(SpinFormsError, ValueError):
    pass


class IndexOutOfRange(SpinFormsError, IndexError):
    pass


class NotOnSphere(SpinFormsError, ValueError):
    pass


class Divergent(SpinFormsError, ValueError):
    pass


class UnclassifiableMonomial(SpinFormsError):
    pass


class VerificationFailed(SpinFormsError, AssertionError):
    """An identity check failed; ``diff`` carries the offending items."""

    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff if diff is not None else []
