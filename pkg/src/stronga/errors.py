"""Exception types and resource caps shared by the whole package."""

from __future__ import annotations

from dataclasses import asdict, dataclass


class RingError(Exception):
    """Base class for every error raised by this package."""


class DegenerateRingError(RingError):
    """A nonzero ring was required but the zero ring was supplied."""


class ResourceCapError(RingError):
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class RingMismatchError(RingError, ValueError):
    """Objects from two different rings were combined."""


class ElementError(RingError, ValueError):
    """An element literal or index is not valid in its ring."""


class PreconditionError(RingError, ValueError):
    """An operation's documented precondition does not hold."""


@dataclass(frozen=True)
class Caps:
    """Explicit resource limits. Exceeding one raises ResourceCapError."""

    table: int = 4096  # largest ring whose Cayley tables are materialized
    axiom_full: int = 512  # above this, axiom checks are sampled
    lattice: int = 4096  # largest ring whose ideal lattice is enumerated
    max_ideals: int = 200_000
    isomorphism: int = 64

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT_CAPS = Caps()
