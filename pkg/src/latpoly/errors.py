"""Exception hierarchy shared by every latpoly module."""


class LatPolyError(Exception):
    """Base class for all latpoly errors."""


class InvalidSizeError(LatPolyError, ValueError):
    pass


class LawViolationError(LatPolyError, ValueError):
    """A lattice table breaks one of the lattice or distributivity laws."""

    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(witness)
        super().__init__(f"{law} violated at {self.witness}")


class ArityError(LatPolyError, ValueError):
    pass


class UnsupportedLatticeError(LatPolyError, ValueError):
    """Raised when a chain-only operation is handed a non-chain lattice."""


class EmptySetError(LatPolyError, ValueError):
    pass


class ContractViolationError(LatPolyError, ValueError):
    """The input does not satisfy the operation's precondition (e.g. not a polynomial)."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class MonotonicityError(LatPolyError, ValueError):
    def __init__(self, lower, upper):
        self.lower = tuple(lower)
        self.upper = tuple(upper)
        super().__init__(f"not nondecreasing: {self.lower} <= {self.upper} but value drops")


class CapExceededError(LatPolyError, ValueError):
    pass


class FormatError(LatPolyError, ValueError):
    """Malformed input file; ``field`` names the offending entry."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
