"""Exception types shared across the toolkit."""


class EpisignalError(Exception):
    """Base class for all episignal errors."""


class DataFormatError(EpisignalError):
    """Input data cannot be parsed or violates a series invariant."""


class NumericError(EpisignalError):
    """A numeric contract was violated (spectrum symmetry, bin collision, ...)."""


class DesignError(NumericError):
    """A filter design spec is infeasible or its realization failed."""
