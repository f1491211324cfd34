"""Exception types shared across the package.

Every cap is a hard limit: exceeding one raises CapExceeded rather than
silently approximating.
"""


class PLocalError(Exception):
    """Base class for all package errors."""


class GroupParseError(PLocalError):
    """Malformed group file or cycle notation."""


class CapExceeded(PLocalError):
    """A configured enumeration/lattice/chamber cap was passed."""


class NotNormal(PLocalError):
    """Quotient requested by a non-normal subgroup."""


class NotSylow(PLocalError):
    """The supplied subgroup is not a Sylow p-subgroup."""


class NotSubgroupChain(PLocalError):
    """B <= G_i <= G fails for some member of a parabolic input."""


class NoProvenance(PLocalError):
    """Chamber operation needs coset provenance the system does not carry."""


class NotCovering(PLocalError):
    """Lifting requested along a map that is not a 2-covering."""


class NotSubsystem(PLocalError):
    """Normality check on a pair that is not nested."""


class NotSaturated(PLocalError):
    """Operation defined only for saturated fusion systems."""


class SearchExhausted(PLocalError):
    """Bounded search (e.g. morphism factorisation) hit its depth limit."""


class PreconditionFailed(PLocalError):
    """A stated precondition does not hold; carries which one."""

    def __init__(self, which: str):
        super().__init__(which)
        self.which = which


class NonCommutingSquares(PLocalError):
    """Diagram of groups whose inclusion squares do not commute."""


class NoIdentityOnSIsomorphism(PLocalError):
    """No isomorphism extending the identity on S between candidate realizers."""


class DisconnectedFixedPoints(PLocalError):
    """Gallery factorisation needs a connected fixed-point subsystem."""


class HypothesisFailed(PLocalError):
    """A theorem hypothesis that the operation cannot proceed without."""


class UnclassifiedResidue(PLocalError):
    """Rank-2 residue is neither a digon nor a recognized generalized m-gon."""
