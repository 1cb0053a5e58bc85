"""Exception hierarchy shared by the pipeline modules."""


class HKError(Exception):
    """Base class for every error raised by hkfsig."""


class InputError(HKError, ValueError):
    """Malformed user input (maps to CLI exit status 2)."""


class OddCount(InputError):
    pass


class NonPositiveExponent(InputError):
    pass


class DegenerateCone(HKError, ValueError):
    pass


class EmptyClause(HKError):
    pass


class UnboundedCell(HKError):
    pass


class UnboundedRegion(HKError):
    pass


class DimensionMismatch(HKError, ValueError):
    pass


class NameOverflow(HKError, ValueError):
    pass
