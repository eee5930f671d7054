"""Exception types shared across the package.

Every error raised by xtoplat derives from :class:`XtoplatError`, so callers
(notably the CLI) can map failures to exit codes without matching on message
text.  Errors carry witnesses where a counterexample exists.
"""

from __future__ import annotations


class XtoplatError(Exception):
    """Base class for all xtoplat errors."""


class DuplicateLabelError(XtoplatError):
    """Two elements were given the same label."""


class CycleError(XtoplatError):
    """The reflexive-transitive closure of the given pairs is not antisymmetric."""

    def __init__(self, first: str, second: str):
        self.witness = (first, second)
        super().__init__(f"cycle through {first!r} and {second!r} violates antisymmetry")


class ZeroSizeError(XtoplatError):
    """A chain/tree/dual-tree constructor was asked for fewer than one element."""


class EmptySpecError(XtoplatError):
    """A forest was requested with no components."""


class EmptyPosetError(XtoplatError):
    """The operation needs at least one element."""


class NotALatticeError(XtoplatError):
    """A pair of elements has no greatest lower bound or least upper bound."""

    def __init__(self, kind: str, first: str, second: str):
        self.kind = kind  # "meet" or "join"
        self.witness = (first, second)
        super().__init__(f"no {kind} for {first!r} and {second!r}")


class SubsetViolationError(XtoplatError):
    """An argument was required to be a subset of another set and is not."""


class NotXTopError(XtoplatError):
    """V(a) ∪ V(b) is not a variety; the pair (a, b) witnesses the failure."""

    def __init__(self, first: str, second: str):
        self.witness = (first, second)
        super().__init__(
            f"varieties are not closed under union: V({first!r}) ∪ V({second!r}) is not a variety"
        )


class NotAnIdealError(XtoplatError):
    """The given subset is not an ideal of the semiring."""


class AxiomError(XtoplatError):
    """A semiring table violates one of the defining axioms."""

    def __init__(self, axiom: str, witness: tuple[str, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"semiring axiom violated: {axiom} at {witness}")


class RangeError(XtoplatError):
    """A numeric parameter is outside its documented range."""
