"""Exception hierarchy for annigraph."""


class AnnigraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidGroup(AnnigraphError, ValueError):
    pass


class WrongGroupKind(AnnigraphError, ValueError):
    """A closed form was asked for a group outside its family."""


class OracleCapExceeded(AnnigraphError):
    pass


class CaseNotCovered(AnnigraphError):
    """No printed rank-3 case guard applies to a valuation triple."""


class GraphTooLarge(AnnigraphError):
    pass


class EquitabilityViolated(AnnigraphError):
    pass


class NotThreshold(AnnigraphError):
    pass


class UnsupportedFormat(AnnigraphError, ValueError):
    pass


class NotSymmetric(AnnigraphError, ValueError):
    pass


class NoConvergence(AnnigraphError):
    pass


class NotSquarefree(AnnigraphError, ValueError):
    pass


class NotApplicable(AnnigraphError, ValueError):
    pass


class GroupTooLarge(AnnigraphError):
    pass


class ParseError(AnnigraphError, ValueError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class NonPrimeBase(ParseError):
    pass
