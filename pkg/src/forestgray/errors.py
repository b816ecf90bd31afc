"""Exception types shared across the package."""


class GrayError(Exception):
    """Base class for every error raised by forestgray."""


class ParseError(GrayError, ValueError):
    """Malformed constraint text or invalid builder parameters."""


class NotTotallyAcyclic(GrayError, ValueError):
    """The constraint digraph has a cycle once arc directions are ignored."""


class UndirectedCycle(NotTotallyAcyclic):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("undirected cycle through " + " - ".join(self.cycle + self.cycle[:1]))


class DuplicateArc(NotTotallyAcyclic):
    def __init__(self, a, b):
        self.arc = (a, b)
        super().__init__(f"parallel arcs between {a!r} and {b!r}")


class CapExceeded(GrayError):
    """Brute-force enumeration was asked to exceed its bit cap."""


class InternalProtocol(GrayError, AssertionError):
    """A generator broke one of its own invariants (a bug, not bad input)."""


class NoFixture(GrayError, KeyError):
    pass
