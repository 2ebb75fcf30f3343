from settings.settings import (
    EXIT_BUDGET,
    EXIT_DOMAIN_ERROR,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL,
)


class CompletionError(Exception):
    exit_code = EXIT_INTERNAL


#------------------------------ Input Errors ----------------------------------

class InputError(CompletionError):
    exit_code = EXIT_INPUT_ERROR


class ParseError(InputError):

    def __init__(self, message, position=None):
        if position is not None:
            message = "{} (at {})".format(message, position)
        super(ParseError, self).__init__(message)
        self.position = position


class FieldMismatchError(InputError):

    def __init__(self, left, right):
        super(FieldMismatchError, self).__init__(
            "field mismatch: {} vs {}".format(left, right)
        )
        self.left = left
        self.right = right


class LengthMismatchError(InputError):
    pass


class MissingTargetFieldError(InputError):

    def __init__(self, theorem, missing):
        super(MissingTargetFieldError, self).__init__(
            "theorem '{}' requires target field(s): {}".format(theorem, ", ".join(missing))
        )
        self.theorem = theorem
        self.missing = tuple(missing)


class InconsistentTargetError(InputError):
    pass


#------------------------------ Domain Errors ----------------------------------

class DomainError(CompletionError):
    exit_code = EXIT_DOMAIN_ERROR


class ZeroMatrixError(DomainError):

    def __init__(self, message="degree undefined for the zero matrix"):
        super(ZeroMatrixError, self).__init__(message)


class ZeroPolynomialError(DomainError):
    pass


#------------------------------ Budget / Internal ----------------------------------

class BudgetExceededError(CompletionError):
    exit_code = EXIT_BUDGET

    def __init__(self, count, budget):
        super(BudgetExceededError, self).__init__(
            "enumeration of {} candidates exceeds budget {}".format(count, budget)
        )
        self.count = count
        self.budget = budget


class InternalInconsistencyError(CompletionError):
    exit_code = EXIT_INTERNAL
