"""Exception hierarchy shared by all modules.

Every error carries a stable ``code`` string (used by the CLI's JSON output)
and the process exit status the CLI should use when it escapes.
"""


class VKError(Exception):
    code = "error"
    exit_status = 2


class BadSyntax(VKError):
    code = "bad_syntax"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DuplicateRole(VKError):
    code = "duplicate_role"


class SignMismatch(VKError):
    code = "sign_mismatch"


class OddOccurrence(VKError):
    code = "odd_occurrence"


class GapOutOfRange(VKError):
    code = "gap_out_of_range"


class InapplicableMove(VKError):
    code = "inapplicable_move"


class UndeclaredGenerator(VKError):
    code = "undeclared_generator"


class NotWirtingerShape(VKError):
    code = "not_wirtinger_shape"


class NotConjugate(VKError):
    code = "not_conjugate"


class WrongDeficiency(VKError):
    code = "wrong_deficiency"


class InternalGraphInvariantViolation(VKError):
    code = "internal_graph_invariant"


class NotCyclic(VKError):
    code = "not_cyclic"


class NotChainForm(VKError):
    code = "not_chain_form"


class NonzeroExponentSum(VKError):
    code = "nonzero_exponent_sum"


class UnknownArc(VKError):
    code = "unknown_arc"


class NotRealizableForm(VKError):
    code = "not_realizable_form"


class BadSplice(VKError):
    code = "bad_splice"


class TraceFailure(VKError):
    code = "trace_failure"


class StateSpaceTooLarge(VKError):
    code = "state_space_too_large"


class NotWirtinger(VKError):
    code = "not_wirtinger"


class NotWeightOne(VKError):
    code = "not_weight_one"


class NotCyclicDef0(VKError):
    code = "not_cyclic_def0"


class SpanCheckFailed(VKError):
    code = "span_check_failed"


class UnknownGroup(VKError):
    code = "unknown_group"


class BudgetExceeded(VKError):
    """Raised when an enumeration would exceed its work budget.

    ``partial`` holds whatever was collected before the budget ran out.
    """

    code = "budget_exceeded"
    exit_status = 3

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
