"""Exception hierarchy.

Everything raised on bad input derives from :class:`HFSError`, which is a
``ValueError``.  The two intermediate classes split failures into
precondition violations (:class:`DomainError`) and refusals to build values
that cannot be materialized (:class:`ResourceLimitError`); the CLI maps them
to distinct exit codes.
"""


class HFSError(ValueError):
    pass


class DomainError(HFSError):
    """An argument violates an operation's precondition."""


class ResourceLimitError(HFSError):
    """The result would be too large to represent in memory."""


class InvalidNaturalError(DomainError):
    pass


class InvalidBaseError(DomainError):
    pass


class InvalidDigitError(DomainError):
    pass


class CanonicalFormError(DomainError):
    """Unsorted or duplicated elements where a canonical set was required."""


class InvalidUrelementError(DomainError):
    pass


class EmptyFoldError(DomainError):
    pass


class EmptySetInFamilyError(DomainError):
    pass


class CyclicGraphError(DomainError):
    pass


class InvalidLabelsError(DomainError):
    pass


class InvalidGraphError(DomainError):
    pass


class TooLargeError(ResourceLimitError):
    pass


class RepresentationOverflowError(ResourceLimitError):
    pass
