"""Exception types shared across the package."""


class PathGaugeError(Exception):
    """Base class for every error raised by this library."""


class EndpointMismatch(PathGaugeError):
    """Concatenation or loop operation on words whose endpoints do not chain."""


class IndexOutOfRange(PathGaugeError, IndexError):
    """Position index outside a word, lift, or walk."""


class UnknownEdge(PathGaugeError):
    """Edge id not present in the ambient complex or labeling."""


class NotConnected(PathGaugeError):
    """Complex is not connected, so no spanning tree or base paths exist."""


class DomainMismatch(PathGaugeError):
    """Group element does not belong to the context it is used with."""


class BaseMismatch(PathGaugeError):
    """Bundle point or path class sits over the wrong base vertex."""


class InfiniteContext(PathGaugeError):
    """Operation requires a finite group context."""


class NonEquivariantSpec(PathGaugeError):
    """Bundle morphism data is malformed (incidence, basepoint, or fibers)."""


class ConjugacyViolated(PathGaugeError):
    """Chord holonomies fail the conjugation relation; names the first bad chord."""

    def __init__(self, chord: str, message: str | None = None):
        self.chord = chord
        super().__init__(message or f"conjugacy relation fails at chord {chord!r}")


class HolonomyIncompatible(PathGaugeError):
    """Base map does not preserve the holonomy assignment on some chord loop."""


class ParseError(PathGaugeError):
    """Malformed input document; message names the offending field or entity."""


class DomainError(PathGaugeError, ValueError):
    """Numeric argument outside the declared domain."""


class SingularityTooClose(PathGaugeError):
    """Integration path passes within the safety margin of a singular point."""


class NotClosed(PathGaugeError):
    """Loop integral requested for a path whose endpoints do not meet."""
