from __future__ import division, absolute_import, print_function


class DSwitchError(Exception):
    '''
    Base class of all domain errors

    Every error carries an optional witness which is emitted
    together with the message in command reports.
    '''

    def __init__(self, message: str = '', witness=None) -> None:
        super(DSwitchError, self).__init__(message)
        self.message = message
        self.witness = witness

    @property
    def name(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        res = {'error': self.name, 'message': self.message}
        if self.witness is not None:
            res['witness'] = self.witness
        return res


class InvariantViolation(DSwitchError):
    '''
    An internal postcondition failed, indicates a bug
    '''


class NonSquareMatrix(DSwitchError):
    pass


class NonIntegralMatrix(DSwitchError):
    pass


class NotRegularOrthogonal(DSwitchError):
    pass


class NotADesign(DSwitchError):
    pass


class NotADifferenceSet(DSwitchError):
    pass


class NotPlanar(DSwitchError):
    pass


class ShapeMismatch(DSwitchError):
    pass


class IndexOutOfRange(DSwitchError):
    pass


class ParamMismatch(DSwitchError):
    pass


class GramMismatch(DSwitchError):
    pass


class RLambdaDegenerate(DSwitchError):
    pass


class IntersectionNotPreserved(DSwitchError):
    pass


class SizeTooLarge(DSwitchError):
    pass


class SiteInvalid(DSwitchError):
    pass


class SizeMismatch(DSwitchError):
    pass


class UnknownId(DSwitchError):
    pass


class SourceMissing(DSwitchError):
    pass


class GroupTooLarge(DSwitchError):

    def __init__(self, message: str = '', bound: int = 0) -> None:
        super(GroupTooLarge, self).__init__(message, witness=bound)
        self.bound = bound


class NotAGroup(DSwitchError):
    pass


class BudgetExceeded(DSwitchError):
    pass


class UnsupportedField(DSwitchError):
    pass


class MalformedGraph6(DSwitchError):

    def __init__(self, message: str = '', offset: int = 0) -> None:
        super(MalformedGraph6, self).__init__(message, witness=offset)
        self.offset = offset


class FormatError(DSwitchError):
    '''
    Malformed design, scheme or graph file
    '''
