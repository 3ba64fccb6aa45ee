"""Exception hierarchy shared by every module."""


class BicomplexError(Exception):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "bicomplex_error"


class DimensionError(BicomplexError, ValueError):
    code = "dimension_mismatch"


class NullConeError(BicomplexError, ArithmeticError):
    """Raised when an operation needs a unit but got a zero divisor."""

    code = "null_cone"


class ZeroChannelError(BicomplexError, ArithmeticError):
    code = "zero_channel"


class NotSelfAdjointError(BicomplexError, ValueError):
    code = "not_self_adjoint"


class ConvergenceFailure(BicomplexError, ArithmeticError):
    code = "convergence_failure"


class PairingOverflow(BicomplexError, ValueError):
    code = "pairing_overflow"


class MetricError(BicomplexError, ValueError):
    """Gram matrix is not Hermitian positive definite."""

    code = "invalid_metric"
