"""Exception hierarchy shared across the package."""


class OrdinalError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptyInput(OrdinalError):
    pass


class NegativeWeight(OrdinalError):
    pass


class ZeroSum(OrdinalError):
    pass


class ParamOutOfRange(OrdinalError):
    pass


class TooFewCategories(OrdinalError):
    pass


class DegenerateDistribution(OrdinalError):
    pass


class SpecInfeasible(OrdinalError):
    pass


class LengthMismatch(OrdinalError):
    pass


class NotNormalized(OrdinalError):
    pass


class BadPartition(OrdinalError):
    pass


class BothEmpty(OrdinalError):
    pass


class KTooLarge(OrdinalError):
    pass


class SingleCluster(OrdinalError):
    pass


class MissingColumn(OrdinalError):
    pass


class UnreadableFile(OrdinalError):
    pass


class RegionAllExcluded(OrdinalError):
    pass


class NoScores(OrdinalError):
    pass


class ZeroVariance(OrdinalError):
    pass


class UnknownRegion(OrdinalError):
    pass


class PortInUse(OrdinalError):
    pass
