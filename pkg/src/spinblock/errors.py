"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so each class carries the code it
should produce.
"""


class SpinBlockError(Exception):
    exit_code = 4


class InvalidInput(SpinBlockError, ValueError):
    """Malformed partition, tuple, modulus or index."""

    exit_code = 2


class InvalidModulus(InvalidInput):
    pass


class InvalidPartition(InvalidInput):
    pass


class InvalidAbacus(InvalidInput):
    pass


class InvalidIndex(InvalidInput):
    pass


class InvalidRange(InvalidInput):
    pass


class PreconditionError(SpinBlockError):
    """The inputs are well formed but violate a domain precondition."""


class NotACore(PreconditionError):
    pass


class UnknownBlock(PreconditionError):
    pass


class InconsistentParities(PreconditionError):
    pass


class BudgetExceeded(SpinBlockError):
    """A search ran past its vertex/path/point budget."""

    exit_code = 3
