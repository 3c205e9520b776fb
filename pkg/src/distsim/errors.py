"""Exception hierarchy shared across the package."""


class DistsimError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(DistsimError, ValueError):
    """A parameter is outside its documented range."""


class InvalidSpecError(DistsimError, ValueError):
    """A measure was invoked with incompatible semantics or options."""


class NotFoundError(DistsimError, LookupError):
    """A word, relation, or measure identifier is unknown."""


class ParseError(DistsimError, ValueError):
    """An input file is malformed; the message names the line."""


class StoreFormatError(DistsimError, ValueError):
    """A store file violates the on-disk format; the message names the section."""


class UndefinedProbabilityError(DistsimError, ArithmeticError):
    """A probability estimate has a zero marginal or empty event space."""


class NegativeInfinityError(UndefinedProbabilityError):
    """PMI of a never-co-occurring pair under the KEEP policy."""


class UndefinedMeasureError(DistsimError, ArithmeticError):
    """A measure is undefined for these profiles (empty support, zero norm)."""


class ZeroDenominatorError(UndefinedMeasureError):
    """A strict divergence hit a zero denominator.

    Callers that cannot guarantee shared support should use the skew
    divergence, the Jensen-Shannon divergence, or the common-co-occurrence
    variant instead.
    """


class UndefinedCorrelationError(DistsimError, ArithmeticError):
    """Correlation is undefined because one input has zero rank variance."""


class EmptyReportError(DistsimError):
    """Every gold pair was skipped; no scores to report."""
