"""Exception types.  Every error that carries evidence keeps it in ``witness``."""


class NacxError(Exception):
    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class DomainError(NacxError, ZeroDivisionError):
    """Arithmetic outside the domain (division by zero, composite modulus...)."""


class ReducibleModulusError(NacxError):
    pass


class NotAutomorphismError(NacxError):
    pass


class OwnerMismatchError(NacxError, TypeError):
    pass


class ZeroDivisorError(NacxError):
    """Raised when an inverse is requested for an element with a zero-divisor partner."""


class UnavailableError(NacxError):
    """Enumeration requested over an infinite field."""


class BudgetExceeded(NacxError):
    pass


class InternalInconsistency(NacxError):
    """Two independent computations disagreed.  Always a bug or bad input data."""


class RecognitionRejected(NacxError):
    def __init__(self, condition, message="", witness=None):
        super().__init__(f"condition ({condition}) failed: {message}", witness)
        self.condition = condition
