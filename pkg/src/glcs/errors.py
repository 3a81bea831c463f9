"""Exception types shared across the package."""

from __future__ import annotations


class GlcsError(Exception):
    """Base class for all errors raised by this package."""


class CyclicGraphError(GlcsError):
    """A directed cycle was found where an acyclic graph is required."""


class CyclicConstraintError(GlcsError):
    """The constraint graph contains a cycle (it must always be acyclic)."""


class EmptyGraphError(GlcsError):
    """An operation received a graph with no vertices."""


class TooLargeError(GlcsError):
    """A brute-force enumeration exceeded its caps; refusing to guess."""


class InfeasibleShapeError(GlcsError):
    """Requested random-graph shape cannot exist (too many edges)."""


class ParseError(GlcsError):
    """A graph file is malformed.  Carries the offending line number."""

    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
