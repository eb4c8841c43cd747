"""Exception hierarchy shared by every layer of the package."""


class DecompositionError(ValueError):
    """Base class for all errors raised by planedecomp."""


class ModeMismatch(DecompositionError):
    """Exact and floating scalars were mixed in one computation."""


class ZeroPoint(DecompositionError):
    """A direction or triangle vertex was the origin."""


class NegativeMass(DecompositionError):
    pass


class TotalMassNotOne(DecompositionError):
    def __init__(self, total, deficit):
        self.total = total
        self.deficit = deficit
        super().__init__(f"total mass is {total}, deficit {deficit}")


class NonZeroMean(DecompositionError):
    def __init__(self, mean):
        self.mean = mean
        super().__init__(f"distribution has mean ({mean[0]}, {mean[1]}), expected (0, 0)")


class NotAntipodal(DecompositionError):
    pass


class NotContaining(DecompositionError):
    """The triangle of a triple does not contain the origin."""


class NotOnLine(DecompositionError):
    pass


class FactorizationMismatch(DecompositionError):
    """The two products of the boundary-term factorization disagree."""


class InternalInconsistency(DecompositionError):
    """An identity that must hold for every valid input failed."""
