"""Exception types shared by all chainlab modules."""


class ChainlabError(Exception):
    """Base class for all chainlab errors."""


class DomainError(ChainlabError):
    """An argument is outside the mathematical domain of the operation.

    Examples: kappa <= 0 or kappa > n, a point with the wrong number of
    coordinates, a coarse resolution that does not divide the fine one.
    """


class ResourceLimitError(ChainlabError):
    """The requested computation exceeds a configured resource cap."""
