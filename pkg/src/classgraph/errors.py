"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to.
"""


class ClassGraphError(Exception):
    exit_code = 2


class InputError(ClassGraphError):
    """Malformed or inconsistent input (exit code 2)."""

    exit_code = 2


class CapExceeded(ClassGraphError):
    """A resource cap (order, coset count, table size) was hit."""

    exit_code = 3


class IncompatibleDegrees(InputError):
    pass


class ElementNotInGroup(InputError):
    pass


class NotNormal(InputError):
    pass


class MalformedGroup(InputError):
    pass


class PrimeNotDividing(InputError):
    pass


class ActionNotAutomorphism(InputError):
    pass


class NotDisconnected(InputError):
    pass


class GraphEmptyOrDisconnected(InputError):
    pass


class KernelInvalid(InputError):
    pass


class PresentationSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGenerator(InputError):
    pass


class CosetLimitExceeded(CapExceeded):
    pass
