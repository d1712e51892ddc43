"""Exception hierarchy. The CLI prints the class name verbatim on domain errors."""


class CoxeterLabError(Exception):
    """Base class for every domain error raised by the library."""


class InvalidGraph(CoxeterLabError):
    pass


class CyclicGraph(InvalidGraph):
    pass


class Disconnected(InvalidGraph):
    pass


class DuplicateEdge(InvalidGraph):
    pass


class UnknownVertex(CoxeterLabError):
    pass


class InvalidParity(InvalidGraph):
    pass


class InvalidStarType(CoxeterLabError):
    pass


class NonIntegerInput(CoxeterLabError):
    pass


class NotExtendedDynkin(CoxeterLabError):
    pass


class NotPositive(CoxeterLabError):
    pass


class NotInS0(CoxeterLabError):
    pass


class NotApplicable(CoxeterLabError):
    pass


class LeavesPositiveCone(CoxeterLabError):
    pass


class NotSingular(CoxeterLabError):
    pass


class InfiniteEntry(CoxeterLabError):
    pass


class EmptySequence(CoxeterLabError):
    pass


class PropertyViolation(CoxeterLabError):
    def __init__(self, prop, witness):
        super().__init__(f"{prop} fails at {witness}")
        self.prop = prop
        self.witness = witness
