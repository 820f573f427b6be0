"""Exception types raised by graphicseq."""


class GraphicSeqError(ValueError):
    """Base class for every error raised by this package."""


class InvalidDegree(GraphicSeqError):
    pass


class NotSorted(GraphicSeqError):
    pass


class LengthMismatch(GraphicSeqError):
    pass


class OddSum(GraphicSeqError):
    pass


class NotPotentiallyGraphic(GraphicSeqError):
    pass


class NonGraphic(GraphicSeqError):
    pass


class EmptySequence(GraphicSeqError):
    pass


class PopulationMismatch(GraphicSeqError):
    pass


class InvalidParameter(GraphicSeqError):
    pass


class SamplingExhausted(GraphicSeqError):
    def __init__(self, message, attempts):
        super().__init__(message)
        self.attempts = attempts
