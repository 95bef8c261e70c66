"""Deciding property (A) and strong property (A) on finite rings.

Both properties are decided two ways:

* ``oracle`` enumerates the whole ideal lattice and checks the definition
  ideal by ideal. In a finite ring every ideal is finitely generated, so
  quantifying over the lattice is exactly quantifying over the finitely
  generated ideals.
* ``fast`` uses anti-monotonicity of the annihilator (I <= J implies
  Ann(J) <= Ann(I)) so that only the maximal ideals in the tested family
  need checking. For (A) these are the maximal ideals of R; for strong (A)
  it is the single ideal generated by all zero-divisors.

The zero ring is rejected. Zero is counted as a zero-divisor.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .errors import DEFAULT_CAPS, Caps, PreconditionError
from .ideals import Ideal, all_ideals, annihilator, ideal_generate, maximal_ideals
from .ring import FiniteRing

METHODS = ("fast", "oracle")
CONVENTION_NOTE = "0 counted as zero-divisor"


@dataclass
class PropertyReport:
    """Verdict plus witness for one property of one ring.

    On failure ``generators`` is an inclusion-minimal list of zero-divisors
    whose ideal has zero annihilator. On success ``annihilated`` pairs each
    maximal tested ideal (by generators) with its least nonzero annihilator.
    """

    ring: FiniteRing
    property: str  # "A" or "strongA"
    verdict: bool
    method: str
    generators: tuple[int, ...] = ()
    annihilated: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    ideals_examined: int = 0
    seconds: float = 0.0

    def to_dict(self) -> dict:
        R = self.ring
        if self.verdict:
            witness = [
                {"ideal": [R.format(g) for g in gens], "annihilator": R.format(a)}
                for gens, a in self.annihilated
            ]
        else:
            witness = {"generators": [R.format(g) for g in sorted(self.generators)]}
        return {
            "verdict": self.verdict,
            "method": self.method,
            "witness": witness,
            "ideals_examined": self.ideals_examined,
        }


def zero_divisor_set(R: FiniteRing) -> list[int]:
    R.require_nonzero()
    return np.flatnonzero(R.zero_divisor_mask()).tolist()


def _least_nonzero(ann: Ideal) -> int | None:
    nz = np.flatnonzero(ann.mask[1:])
    return int(nz[0]) + 1 if len(nz) else None


def _annihilator_is_zero(R: FiniteRing, gens) -> bool:
    gens = list(gens)
    if not gens:
        return R.size == 1
    return not (R.mul_table[1:, gens] == 0).all(axis=1).any()


def shrink_witness(R: FiniteRing, gens) -> tuple[int, ...]:
    """Drop generators in list order while Ann(<gens>) stays {0}."""
    gens = [R.index_of(g) for g in gens]
    zd = R.zero_divisor_mask()
    if not all(zd[g] for g in gens):
        raise PreconditionError("witness generators must all be zero-divisors")
    if not _annihilator_is_zero(R, gens):
        raise PreconditionError("generated ideal has a nonzero annihilator")
    # Ann(<gens>) is the intersection of the Ann(g); bit j of a row is
    # "nonzero element j+1 kills g". Dropping g leaves (kept before g) & (all after g).
    ann = np.packbits(R.mul_table[1:, gens] == 0, axis=0).T
    suffix = np.empty((len(gens) + 1, ann.shape[1]), dtype=np.uint8)
    suffix[-1] = 0xFF
    for i in range(len(gens) - 1, -1, -1):
        suffix[i] = suffix[i + 1] & ann[i]
    prefix = np.full(ann.shape[1], 0xFF, dtype=np.uint8)
    pad = np.packbits(np.ones(R.size - 1, dtype=bool))
    kept = []
    for i, g in enumerate(gens):
        if ((prefix & suffix[i + 1] & pad) == 0).all():
            continue
        kept.append(g)
        prefix &= ann[i]
    return tuple(kept)


def _maximal_members(ideals: list[Ideal]) -> list[Ideal]:
    if not ideals:
        return []
    M = np.array([I.mask for I in ideals], dtype=np.int64)
    outside = (M @ (1 - M).T) == 0  # [i, j]: ideal i <= ideal j
    sizes = M.sum(axis=1)
    keep = []
    for i in range(len(ideals)):
        bigger = outside[i] & (sizes > sizes[i])
        if not bigger.any():
            keep.append(ideals[i])
    return keep


def _success_witness(R: FiniteRing, tops: list[Ideal]) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for I in sorted(tops, key=lambda I: I.members):
        a = _least_nonzero(annihilator(R, I))
        out.append((I.generators, a))
    return out


def _first_failure(R: FiniteRing, ideals: list[Ideal]) -> Ideal | None:
    # ideals arrive sorted by (size, members); the first failure is the minimum
    for I in ideals:
        if _least_nonzero(annihilator(R, I)) is None:
            return I
    return None


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def has_property_a(R: FiniteRing, method: str = "fast", caps: Caps = DEFAULT_CAPS) -> PropertyReport:
    """Every ideal consisting of zero-divisors has a nonzero annihilator."""
    _check_method(method)
    R.require_nonzero()
    t0 = time.perf_counter()
    zd = R.zero_divisor_mask()
    if method == "oracle":
        tested = [I for I in all_ideals(R, caps) if not (I.mask & ~zd).any()]
    else:
        # zero-divisors are the non-units in a finite ring, so the maximal
        # ideals inside Z(R) are exactly the maximal ideals of R
        tested = maximal_ideals(R)
        assert all(not (I.mask & ~zd).any() for I in tested)
    bad = _first_failure(R, tested)
    report = PropertyReport(R, "A", bad is None, method, ideals_examined=len(tested))
    if bad is None:
        tops = tested if method == "fast" else _maximal_members(tested)
        report.annihilated = _success_witness(R, tops)
    else:
        report.generators = shrink_witness(R, bad.generators)
    report.seconds = time.perf_counter() - t0
    return report


def has_strong_property_a(R: FiniteRing, method: str = "fast", caps: Caps = DEFAULT_CAPS) -> PropertyReport:
    """Every ideal generated by zero-divisors (possibly all of R) has a
    nonzero annihilator."""
    _check_method(method)
    R.require_nonzero()
    t0 = time.perf_counter()
    zd = R.zero_divisor_mask()
    zset = np.flatnonzero(zd).tolist()
    if method == "oracle":
        tested = []
        for I in all_ideals(R, caps):
            inside = np.flatnonzero(I.mask & zd).tolist()
            if ideal_generate(R, inside) == I:
                tested.append(I)
    else:
        top = ideal_generate(R, zset)
        tested = [Ideal(R, top.mask)]
    bad = _first_failure(R, tested)
    report = PropertyReport(R, "strongA", bad is None, method, ideals_examined=len(tested))
    if bad is None:
        report.annihilated = _success_witness(R, _maximal_members(tested))
    else:
        report.generators = shrink_witness(R, np.flatnonzero(bad.mask & zd).tolist())
    report.seconds = time.perf_counter() - t0
    return report


def verify_witness(report: PropertyReport) -> bool:
    """Re-check a report's witness from scratch against the ring tables."""
    R = report.ring
    M = R.mul_table
    if report.verdict:
        for gens, a in report.annihilated:
            if a is None or a == 0:
                return False
            I = ideal_generate(R, gens)
            if (M[a, list(I.members)] != 0).any():
                return False
        return True
    zd = R.zero_divisor_mask()
    gens = list(report.generators)
    if not gens or not all(zd[g] for g in gens):
        return False
    I = ideal_generate(R, gens)
    return not (M[1:][:, list(I.members)] == 0).all(axis=1).any()
