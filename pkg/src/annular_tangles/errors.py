"""Exception hierarchy shared by all modules."""


class TangleError(Exception):
    """Base class for every error raised by this package."""


class InvalidGenerator(TangleError, ValueError):
    pass


class BoundaryMismatch(TangleError, ValueError):
    pass


class ParseError(TangleError, ValueError):
    pass


class NoMatch(TangleError, ValueError):
    pass


class ArityMismatch(TangleError, ValueError):
    pass


class InternalInvariant(TangleError, AssertionError):
    """A structural invariant that should hold by construction was violated."""


class GeometryDegenerate(TangleError):
    """Two polylines touch, so containment is not decidable."""


class MixedContext(TangleError, ValueError):
    pass


class NoSupport(TangleError, ValueError):
    pass


class RuleGap(TangleError):
    """A surgery configuration for which no rule is available."""


class ConjectureViolation(TangleError):
    """Two admissible surgery orders gave different products."""
