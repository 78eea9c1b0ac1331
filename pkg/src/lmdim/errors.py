"""Exception hierarchy shared by every module of the package."""


class LmdError(ValueError):
    """Base class for all errors raised by lmdim."""


class GraphError(LmdError):
    """A graph violates a structural invariant (loop, duplicate edge, bad index)."""


class FamilyError(LmdError):
    """A family string or family parameter is invalid."""


class DisconnectedGraphError(LmdError):
    """An operation that needs a connected graph received a disconnected one."""


class InstanceTooLarge(LmdError):
    """The instance exceeds the exhaustive-search cap."""


class RuleNotApplicable(LmdError):
    """The premises of a formula or characterization do not hold for the input."""


class ClassificationError(RuleNotApplicable):
    """A graph meets the premises of a classification but fits none of its cases."""


class InconsistentBounds(AssertionError):
    """Two bound rules produced an empty interval; always an implementation bug."""
