"""Exception hierarchy for the workbench."""


class TauTiltError(Exception):
    """Base class for all domain errors."""


class EmptyQuiver(TauTiltError):
    pass


class NonAdmissible(TauTiltError):
    pass


class UnknownVertex(TauTiltError):
    pass


class AlgebraMismatch(TauTiltError):
    pass


class CharacteristicTooSmall(TauTiltError):
    pass


class DecompositionInconclusive(TauTiltError):
    pass


class NotTauRigid(TauTiltError):
    pass


class SupportViolation(TauTiltError):
    pass


class NotBasic(TauTiltError):
    pass


class NotComplete(TauTiltError):
    pass


class ExchangeAssertionFailed(TauTiltError):
    pass


class ApproximationVerificationFailed(TauTiltError):
    pass


class HasseMismatch(TauTiltError):
    pass


class Inconclusive(TauTiltError):
    pass


class MutationMismatch(TauTiltError):
    pass
