"""Exception hierarchy shared by the engines and the command line."""


class BaselociError(Exception):
    """Base class for every error raised on purpose by this package."""


class InputError(BaselociError, ValueError):
    """Malformed input.  ``line`` and ``column`` locate the problem in a file."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if source:
            where = str(source)
        if line is not None:
            where += ":%d:%d" % (line, column or 0)
        super().__init__("%s: %s" % (where, message) if where else message)


class ModelInvariantError(InputError):
    """A model parsed but violates one of its declared invariants."""

    def __init__(self, invariant, detail=""):
        self.invariant = invariant
        super().__init__("model invariant violated [%s]%s" % (invariant, ": " + detail if detail else ""))


class NotBigError(BaselociError, ValueError):
    pass


class NotNefError(BaselociError, ValueError):
    pass


class IncompleteCatalogError(BaselociError):
    """A solved negative-part coefficient came out negative.  The curve catalog
    is missing a negative curve; the offending coefficients are attached."""

    def __init__(self, coefficients):
        self.coefficients = dict(coefficients)
        shown = ", ".join("%s=%s" % (k, v) for k, v in sorted(self.coefficients.items()))
        super().__init__("incomplete curve catalog: negative coefficients %s" % shown)


class NegativeDefinitenessError(BaselociError):
    pass


class DimensionCapError(BaselociError, ValueError):
    pass


class DomainError(BaselociError, ValueError):
    """A point lies outside the open cone on which a function is defined."""


class StreamStalledError(BaselociError):
    pass


class VerificationError(BaselociError):
    """A bounded verification failed; ``witness`` says where."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
