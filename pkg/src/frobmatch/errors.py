"""Exception hierarchy shared across modules.

UsageError subclasses map to CLI exit code 64; everything else that escapes
is an internal failure (exit 1). Bad reduction is a classification value,
not an exception (see ecpoint.BadReduction).
"""


class FrobmatchError(Exception):
    pass


class UsageError(FrobmatchError):
    """Invalid user input: parse errors, bad parameters."""


class NonSquarefreeDisc(UsageError):
    pass


class InvalidDisc(UsageError):
    pass


class BadAlphaPair(UsageError):
    pass


class EllTooLarge(UsageError):
    pass


class EllDividesBoth(BadAlphaPair):
    pass


class CurveParseError(UsageError):
    def __init__(self, text, pos, why):
        super().__init__(f"cannot parse curve {text!r} at position {pos}: {why}")
        self.pos = pos


class FieldParseError(UsageError):
    pass


class MissingTable(UsageError):
    pass


class DomainError(FrobmatchError):
    """Operation called outside its stated domain."""


class DegreeTooHigh(DomainError):
    pass


class CutoffExceeded(DomainError):
    pass


class HasseViolation(DomainError):
    pass


class MismatchedPrime(DomainError):
    pass


class FilteredPrime(DomainError):
    """Prime fails the p not dividing 6*N1*N2 hypothesis of the trace/field equivalence."""


class ZeroInput(DomainError):
    pass


class ZeroDet(DomainError):
    pass


class FieldMismatch(DomainError):
    pass


class BeyondScan(DomainError):
    pass


class DomainTooSmall(DomainError):
    pass


class SingularModel(UsageError):
    pass


class AmbiguousOrder(FrobmatchError):
    """BSGS could not pin down a unique group order (should not happen for p > 457)."""


class CacheInvalid(FrobmatchError):
    """Cache entry failed its integrity check; caller recomputes."""
