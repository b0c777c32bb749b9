"""Domain error hierarchy.

All errors subclass ValueError so callers that only guard against
ValueError keep working.
"""


class SchedulingError(ValueError):
    """Base exception for scheduling domain errors."""

    pass


class InstanceError(SchedulingError):
    """Raised when papers or sessions violate construction invariants."""

    pass


class MalformedScheduleError(SchedulingError):
    """Raised when a schedule references unknown papers or sessions."""

    pass


class MalformedLabelingError(SchedulingError):
    """Raised when a labeling does not cover the papers it is applied to."""

    pass


class DimensionMismatchError(SchedulingError):
    """Raised when a similarity matrix does not match the paper count."""

    pass
