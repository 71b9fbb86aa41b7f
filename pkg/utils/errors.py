"""Exception hierarchy shared by every package in the toolkit."""


class ImmunizationError(Exception):
    """Base class for all errors raised by this project."""


class EdgeListParseError(ImmunizationError, ValueError):
    def __init__(self, message, line_number=None):
        self.reason = message
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)

    def __reduce__(self):
        return type(self), (self.reason, self.line_number)


class ParameterError(ImmunizationError, ValueError):
    pass


class NoSeedError(ImmunizationError, ValueError):
    pass


class CapacityError(ImmunizationError, ValueError):
    pass


class UndefinedStatisticError(ImmunizationError, ValueError):
    pass


class DegenerateDistributionError(ImmunizationError, ValueError):
    pass


class NumericError(ImmunizationError, ArithmeticError):
    pass


class ConfigError(ImmunizationError, ValueError):
    pass


class ReplicaError(ImmunizationError, RuntimeError):
    """A failure inside one ensemble replica, tagged with its index."""

    def __init__(self, replica_index, cause):
        super().__init__(f"replica {replica_index}: {type(cause).__name__}: {cause}")
        self.replica_index = replica_index
        self.cause = cause

    def __reduce__(self):
        return type(self), (self.replica_index, self.cause)
