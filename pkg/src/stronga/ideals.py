"""Ideals of finite rings: generation, arithmetic, annihilators, lattices.

An ideal carries its member set as a boolean mask over the ring's element
universe; equality and hashing go through that mask, never through the
generator list.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import DEFAULT_CAPS, Caps, ResourceCapError, RingMismatchError
from .ring import FiniteRing, format_element


class Ideal:
    def __init__(self, ring: FiniteRing, mask: np.ndarray, generators: Iterable[int] | None = None):
        mask = np.asarray(mask, dtype=bool)
        mask.setflags(write=False)
        self.ring = ring
        self.mask = mask
        self._generators = None if generators is None else tuple(int(g) for g in generators)

    @cached_property
    def members(self) -> tuple[int, ...]:
        return tuple(np.flatnonzero(self.mask).tolist())

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    @property
    def generators(self) -> tuple[int, ...]:
        if self._generators is None:
            self._generators = canonical_generators(self.ring, self.mask)
        return self._generators

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def __len__(self) -> int:
        return self.size

    def __contains__(self, x) -> bool:
        return bool(self.mask[self.ring.index_of(x)])

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.key == other.key

    def __hash__(self):
        return hash((id(self.ring), self.key))

    def __le__(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return not (self.mask & ~other.mask).any()

    def __repr__(self):
        return f"<Ideal {self.describe()} of {self.ring.descriptor}, size {self.size}>"

    def describe(self) -> str:
        """Expression-syntax rendering, e.g. ``ideal(2, 3)``."""
        return "ideal(" + ", ".join(format_element(self.ring.decode(g)) for g in self.generators) + ")"


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring is not J.ring:
        raise RingMismatchError(f"ideals of {I.ring.descriptor} and {J.ring.descriptor} mixed")


def principal_mask(R: FiniteRing, g: int) -> np.ndarray:
    mask = np.zeros(R.size, dtype=bool)
    mask[R.mul_table[g]] = True
    return mask


def sum_masks(R: FiniteRing, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Member mask of I + J for ideals given by masks (a set sum suffices)."""
    s = R.add_table[np.ix_(np.flatnonzero(a), np.flatnonzero(b))]
    out = np.zeros(R.size, dtype=bool)
    out[s.ravel()] = True
    return out


def canonical_generators(R: FiniteRing, mask: np.ndarray) -> tuple[int, ...]:
    """Greedy generating set: scan members by index, keep those not yet generated."""
    current = np.zeros(R.size, dtype=bool)
    current[0] = True
    gens = []
    for x in np.flatnonzero(mask):
        if not current[x]:
            gens.append(int(x))
            current = sum_masks(R, current, principal_mask(R, int(x)))
    return tuple(gens)


def ideal_generate(R: FiniteRing, gens: Iterable) -> Ideal:
    """Smallest ideal containing ``gens``: the sum of the principal ideals R*g."""
    idx = [R.index_of(g) for g in gens]
    mask = np.zeros(R.size, dtype=bool)
    mask[0] = True
    for g in idx:
        if not mask[g]:
            mask = sum_masks(R, mask, principal_mask(R, g))
    return Ideal(R, mask, idx)


def zero_ideal(R: FiniteRing) -> Ideal:
    return ideal_generate(R, [])


def unit_ideal(R: FiniteRing) -> Ideal:
    return ideal_generate(R, [R.one])


def ideal_from_members(R: FiniteRing, members: Iterable[int]) -> Ideal:
    """Wrap an explicit member set that the caller knows is an ideal."""
    mask = np.zeros(R.size, dtype=bool)
    mask[[R.index_of(m) for m in members]] = True
    return Ideal(R, mask)


def annihilator(R: FiniteRing, I: Ideal) -> Ideal:
    """{a : a*x = 0 for all x in I}, tested against the generators of I only."""
    if I.ring is not R:
        raise RingMismatchError("ideal does not belong to this ring")
    gens = list(I.generators)
    if not gens:
        return Ideal(R, np.ones(R.size, dtype=bool))
    mask = (R.mul_table[:, gens] == 0).all(axis=1)
    return Ideal(R, mask)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, sum_masks(I.ring, I.mask, J.mask), I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    R = I.ring
    prods = R.mul_table[np.ix_(list(I.generators), list(J.generators))].ravel()
    return ideal_generate(R, sorted(set(prods.tolist())))


def ideal_equals(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I == J


def ideal_contains(I: Ideal, x) -> bool:
    return x in I


def is_proper(I: Ideal) -> bool:
    return I.size < I.ring.size


def is_regular_ideal(R: FiniteRing, I: Ideal) -> bool:
    """True iff I contains a non-zero-divisor."""
    R.require_nonzero()
    if I.ring is not R:
        raise RingMismatchError("ideal does not belong to this ring")
    return bool((I.mask & ~R.zero_divisor_mask()).any())


def all_ideals(R: FiniteRing, caps: Caps = DEFAULT_CAPS) -> list[Ideal]:
    """Every ideal of R, as the join-closure of the principal ideals.

    Processing principal ideals P1, P2, ... in turn and adding I + Pk for
    every ideal I found so far yields all sums of subsets of principals,
    which is every ideal. Sorted by (size, members).
    """
    if R.size > caps.lattice:
        raise ResourceCapError(f"ideal lattice of {R.descriptor}", R.size, caps.lattice)
    principals: dict[bytes, Ideal] = {}
    for x in range(R.size):
        P = Ideal(R, principal_mask(R, x), (x,) if x else ())
        principals.setdefault(P.key, P)
    lattice: dict[bytes, Ideal] = {}
    zero = zero_ideal(R)
    lattice[zero.key] = zero
    for P in principals.values():
        for I in list(lattice.values()):
            if P <= I:
                continue
            J = Ideal(R, sum_masks(R, I.mask, P.mask), I.generators + P.generators)
            if J.key not in lattice:
                lattice[J.key] = J
                if len(lattice) > caps.max_ideals:
                    raise ResourceCapError(f"ideal count of {R.descriptor}", len(lattice), caps.max_ideals)
    return sorted(lattice.values(), key=lambda I: (I.size, I.members))


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    """Maximal ideals of a finite ring, without enumerating the lattice.

    Each non-unit x not yet covered is grown greedily: y is absorbed when
    I + Ry stays proper, i.e. when no r gives 1 - r*y in I. Prime avoidance
    guarantees every maximal ideal has a member outside all the others, so
    every maximal ideal is reached.
    """
    R.require_nonzero()
    nonunits = np.flatnonzero(~R.units_mask())
    covered = np.zeros(R.size, dtype=bool)
    one_row = R.add_table[R.one]
    found = []
    for x in nonunits:
        if covered[x]:
            continue
        mask = principal_mask(R, int(x))
        gens = [int(x)]
        for y in nonunits:
            if mask[y] or mask[one_row[R.neg_table[R.mul_table[y]]]].any():
                continue
            mask = sum_masks(R, mask, principal_mask(R, int(y)))
            gens.append(int(y))
        I = Ideal(R, mask, gens)
        found.append(I)
        covered |= mask
    return sorted(found, key=lambda I: I.members)
