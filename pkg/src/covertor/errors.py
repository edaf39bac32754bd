"""Exception hierarchy.

Every error carries the process exit code the CLI maps it to:
2 for malformed input, 3 for violated mathematical preconditions,
4 for numerical escalation failures.
"""


class CovertorError(Exception):
    exit_code = 1

    @property
    def code(self) -> str:
        return type(self).__name__


class InputError(CovertorError, ValueError):
    exit_code = 2


class ParseError(InputError):
    pass


class ValidationError(InputError):
    pass


class PreconditionError(CovertorError, ValueError):
    exit_code = 3


class NotAKnot(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class NotPairwiseCoprime(PreconditionError):
    pass


class NotRationalHomologySphere(PreconditionError):
    pass


class DegenerateAtRoot(PreconditionError):
    pass


class DetNotOne(PreconditionError):
    pass


class NotPrimePower(PreconditionError):
    pass


class MissingFroyshov(PreconditionError):
    pass


class DiagramTooLarge(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NotHermitian(PreconditionError):
    pass


class NumericalError(CovertorError, ArithmeticError):
    exit_code = 4


class PrecisionExhausted(NumericalError):
    pass
