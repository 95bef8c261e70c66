"""Executable finite-instance checks of the transfer results for (A) and
strong (A), plus the corpus generator and the converse search.

Every check states its finite substitution in ``analog``. None of them
claims to reproduce an infinite example; they replay the statements on
finite rings, where

* polynomial and power-series rings are replaced by finite fields and
  finite local rings,
* torsion-free modules over a domain become free modules over a field,
* a regular ideal is necessarily the whole ring (regular elements of a
  finite ring are units), and localizing at regular elements changes
  nothing.

Every finite ring is Noetherian, so every corpus ring must have (A).
Non-(A) rings cannot appear, so the counterexamples that need them are not
reproduced; only the constructions behind them are built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .constructions import duplication, idealization, poly_quotient, product, quotient
from .deciders import has_property_a, has_strong_property_a
from .errors import DEFAULT_CAPS, Caps, PreconditionError, ResourceCapError
from .ideals import Ideal, all_ideals, ideal_generate, is_proper, is_regular_ideal
from .isomorphism import fingerprint, ring_isomorphic
from .modules import module_free, module_ideal, module_quotient
from .ring import FiniteRing, check_ring_axioms, is_field, is_local, is_reduced, zmod

ANALOGS = {
    "thm2.2": "A ∝ A^k with A finite: free-module idealization replayed on finite rings",
    "lem2.6": "domain and torsion-free module replaced by a finite field K and free module K^n",
    "thm3.1": "R ⋈ I on finite rings; the only regular ideal of a finite ring is R itself",
    "ex2.1": "polynomial ring K[X] replaced by a finite ring; R1 x R2 fails strong (A) via (1,0),(0,1)",
    "coincidence": "duplication along an ideal with I*I = 0 versus idealization of I as a module",
    "reduced": "duplication of a finite field (the finite domains) along each of its ideals",
    "full-dup": "total quotient rings are trivial on finite rings: R ⋈ R equals R x R literally",
    "regular-units": "localization at regular elements is the identity on finite rings: regular implies unit",
    "converse-3.1": "power series ring replaced by finite rings; searching for R strong (A) with R ⋈ I not",
}


@dataclass(frozen=True)
class CorpusSpec:
    max_size: int = 256
    depth: int = 2
    moduli: tuple[int, ...] = tuple(range(2, 33))
    seed: int = 0
    sample: int | None = None  # keep a seeded random subset of this many rings

    def to_dict(self) -> dict:
        return {
            "max_size": self.max_size,
            "depth": self.depth,
            "moduli": list(self.moduli),
            "seed": self.seed,
            "sample": self.sample,
        }


@dataclass
class CheckResult:
    check: str
    instance: str
    holds: bool
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def analog(self) -> str:
        return ANALOGS[self.check]

    def to_dict(self) -> dict:
        out = {"check": self.check, "instance": self.instance, "holds": self.holds, "details": self.details}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _a(R: FiniteRing, method: str) -> bool:
    return has_property_a(R, method).verdict


def _sa(R: FiniteRing, method: str) -> bool:
    return has_strong_property_a(R, method).verdict


def _iff_result(check: str, instance: str, pairs: dict[str, tuple[bool, bool]], implications=()) -> CheckResult:
    """Build a result from biconditional pairs and (premise, conclusion) implications."""
    details, bad = {}, {}
    for name, (lhs, rhs) in pairs.items():
        details[name] = [lhs, rhs]
        if lhs != rhs:
            bad[name] = [lhs, rhs]
    for name, (premise, conclusion) in implications:
        details[name] = [premise, conclusion]
        if premise and not conclusion:
            bad[name] = [premise, conclusion]
    return CheckResult(check, instance, not bad, details, bad or None)


def _require(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise ResourceCapError(what, size, cap)


# -- individual checks ---------------------------------------------------------


def check_free_idealization(A: FiniteRing, k: int, method: str = "fast", max_size: int = 4096) -> CheckResult:
    """(strong) (A) holds for A iff it holds for A ∝ A^k."""
    _require(A.size ** (k + 1), max_size, f"{A.descriptor} idealized by free({k})")
    R = idealization(A, module_free(A, k))
    return _iff_result(
        "thm2.2", R.descriptor,
        {"strongA": (_sa(A, method), _sa(R, method)), "A": (_a(A, method), _a(R, method))},
    )


def check_field_idealization(K: FiniteRing, n: int, method: str = "fast", max_size: int = 4096) -> CheckResult:
    """K ∝ K^n over a finite field is strong (A), hence (A)."""
    if not is_field(K):
        raise PreconditionError(f"{K.descriptor} is not a field")
    _require(K.size ** (n + 1), max_size, f"{K.descriptor} idealized by free({n})")
    R = idealization(K, module_free(K, n))
    sa, a = _sa(R, method), _a(R, method)
    bad = {name: v for name, v in (("strongA", sa), ("A", a)) if not v}
    return CheckResult("lem2.6", R.descriptor, not bad, {"strongA": sa, "A": a}, bad or None)


def check_duplication_transfer(R: FiniteRing, I: Ideal, method: str = "fast", max_size: int = 4096) -> CheckResult:
    """strong (A) and (A) descend from R ⋈ I to R; for regular I, (A) transfers both ways."""
    _require(R.size * I.size, max_size, f"dup({R.descriptor}, {I.describe()})")
    S = duplication(R, I)
    sa_s, sa_r, a_s, a_r = _sa(S, method), _sa(R, method), _a(S, method), _a(R, method)
    pairs = {}
    regular = is_regular_ideal(R, I)
    if regular:
        pairs["A_iff_when_regular"] = (a_s, a_r)
    result = _iff_result(
        "thm3.1", S.descriptor, pairs,
        [("strongA_descends", (sa_s, sa_r)), ("A_descends", (a_s, a_r))],
    )
    result.details["regular_ideal"] = regular
    result.details["proper_ideal"] = is_proper(I)
    return result


def check_product_transfer(R1: FiniteRing, R2: FiniteRing, method: str = "fast", max_size: int = 4096) -> CheckResult:
    """(A) passes to R1 x R2; a product of two nonzero rings is never strong (A)."""
    _require(R1.size * R2.size, max_size, f"product({R1.descriptor}, {R2.descriptor})")
    P = product(R1, R2)
    a1, a2 = _a(R1, method), _a(R2, method)
    rep = has_strong_property_a(P, method)
    a_p = _a(P, method)
    details = {"A_factors": [a1, a2], "A": a_p, "strongA": rep.verdict}
    if not rep.verdict:
        details["witness"] = rep.to_dict()["witness"]["generators"]
    bad = {}
    if a1 and a2 and not a_p:
        bad["A_transfers"] = [a1, a2, a_p]
    if rep.verdict:
        bad["not_strongA"] = rep.verdict
    return CheckResult("ex2.1", P.descriptor, not bad, details, bad or None)


def check_idealization_coincidence(R: FiniteRing, I: Ideal) -> CheckResult:
    """With I*I = 0, R ⋈ I and R ∝ I have identical tables (same encoding)."""
    prods = R.mul_table[np.ix_(list(I.members), list(I.members))]
    if (prods != 0).any():
        i, j = np.argwhere(prods != 0)[0]
        x, y = I.members[i], I.members[j]
        raise PreconditionError(f"I*I != 0 in {R.descriptor}: {R.format(x)}*{R.format(y)} = {R.format(R.mul(x, y))}")
    D = duplication(R, I)
    T = idealization(R, module_ideal(R, I))
    same_add = bool(np.array_equal(D.add_table, T.add_table))
    same_mul = bool(np.array_equal(D.mul_table, T.mul_table))
    details = {"idealization": T.descriptor, "add_identical": same_add, "mul_identical": same_mul}
    ok = same_add and same_mul
    return CheckResult("coincidence", D.descriptor, ok, details, None if ok else details)


def check_duplication_reduced(R: FiniteRing) -> CheckResult:
    """Duplications of a finite field along each of its ideals are reduced."""
    if not is_field(R):
        raise PreconditionError(f"{R.descriptor} is not a finite domain")
    details = {}
    for I in all_ideals(R):
        details[duplication(R, I).descriptor] = is_reduced(duplication(R, I))
    bad = {k: v for k, v in details.items() if not v}
    return CheckResult("reduced", R.descriptor, not bad, details, bad or None)


def full_duplication_map(R: FiniteRing) -> np.ndarray:
    """Index map R ⋈ R -> R x R sending (r, e) to (r, r + e)."""
    n = R.size
    idx = np.arange(n * n)
    r, e = np.divmod(idx, n)
    return r * n + R.add_table[r, e]


def check_full_duplication_product(R: FiniteRing) -> CheckResult:
    """R ⋈ R coincides with R x R under (r, e) -> (r, r + e)."""
    D = duplication(R, ideal_generate(R, [R.one]))
    P = product(R, R)
    phi = full_duplication_map(R)
    bij = len(np.unique(phi)) == D.size
    same_add = bool((phi[D.add_table] == P.add_table[np.ix_(phi, phi)]).all())
    same_mul = bool((phi[D.mul_table] == P.mul_table[np.ix_(phi, phi)]).all())
    ok = bij and same_add and same_mul and phi[D.one] == P.one
    details = {"bijective": bij, "add_preserved": same_add, "mul_preserved": same_mul}
    return CheckResult("full-dup", D.descriptor, bool(ok), details, None if ok else details)


def check_regular_units(R: FiniteRing) -> CheckResult:
    """Regular elements are units and regular ideals are the whole ring."""
    regular = ~R.zero_divisor_mask()
    units = R.units_mask()
    elem_ok = bool((regular == units).all())
    reg_ideals = [I for I in all_ideals(R) if is_regular_ideal(R, I)]
    ideal_ok = all(I.size == R.size for I in reg_ideals)
    details = {"regular_is_unit": elem_ok, "regular_ideals_are_R": ideal_ok, "regular_ideals": len(reg_ideals)}
    ok = elem_ok and ideal_ok
    return CheckResult("regular-units", R.descriptor, ok, details, None if ok else details)


# -- corpus ----------------------------------------------------------------------

POLY_MODULI = ([0, 0, 1], [0, 0, 0, 1], [1, 1, 1])  # X^2, X^3, X^2 + X + 1


def _candidates(level: list[FiniteRing], older: list[FiniteRing], max_size: int) -> Iterable[Callable[[], FiniteRing]]:
    """Deferred constructions using at least one operand from ``level``."""
    pool = older + level
    new_ids = {id(R) for R in level}
    for i, R1 in enumerate(pool):
        for R2 in pool[i:]:
            if (id(R1) in new_ids or id(R2) in new_ids) and R1.size * R2.size <= max_size:
                yield lambda R1=R1, R2=R2: product(R1, R2)
    for R in level:
        n = R.size
        ideals = all_ideals(R)
        for I in ideals:
            if 1 < I.size < n:
                yield lambda R=R, I=I: quotient(R, I)
        for f in POLY_MODULI:
            if n ** (len(f) - 1) <= max_size:
                yield lambda R=R, f=f: poly_quotient(R, f)
        for k in (1, 2):
            if n ** (k + 1) <= max_size:
                yield lambda R=R, k=k: idealization(R, module_free(R, k))
        for I in ideals:
            if 1 < I.size < n and n * (n // I.size) <= max_size:
                yield lambda R=R, I=I: idealization(R, module_quotient(R, I))
        for I in ideals:
            if n * I.size <= max_size:
                yield lambda R=R, I=I: duplication(R, I)


def generate_corpus(spec: CorpusSpec = CorpusSpec(), caps: Caps = DEFAULT_CAPS) -> list[FiniteRing]:
    """Deterministic corpus of rings built from Z/n by up to ``depth`` levels
    of constructions, deduplicated up to isomorphism for small rings.

    Rings with at most ``caps.isomorphism`` elements are kept only if no
    earlier ring is isomorphic; larger rings are deduplicated by descriptor.
    The result is sorted by (size, descriptor).
    """
    if spec.max_size > caps.table:
        raise ResourceCapError("corpus max size", spec.max_size, caps.table)
    kept: list[FiniteRing] = []
    buckets: dict[tuple, list[FiniteRing]] = {}
    seen: set[str] = set()

    def admit(R: FiniteRing) -> bool:
        if R.is_zero or R.size > spec.max_size or R.descriptor in seen:
            return False
        seen.add(R.descriptor)
        if R.size <= caps.isomorphism:
            key = fingerprint(R)
            same = buckets.setdefault(key, [])
            if any(ring_isomorphic(R, S, caps.isomorphism) for S in same):
                return False
            same.append(R)
        kept.append(R)
        return True

    level = [R for R in (zmod(n) for n in sorted(set(spec.moduli)) if 1 < n <= spec.max_size) if admit(R)]
    older: list[FiniteRing] = []
    for _ in range(spec.depth - 1):
        nxt = []
        for build in _candidates(level, older, spec.max_size):
            R = build()
            if admit(R):
                nxt.append(R)
        older, level = older + level, nxt
    out = sorted(kept, key=lambda R: (R.size, R.descriptor))
    if spec.sample is not None and spec.sample < len(out):
        chosen = sorted(random.Random(spec.seed).sample(range(len(out)), spec.sample))
        out = [out[i] for i in chosen]
    return out


# -- sweeps ------------------------------------------------------------------------


@dataclass
class SearchReport:
    instances: int
    hits: list[dict]
    improper_skipped: int

    @property
    def found(self) -> bool:
        return bool(self.hits)

    def to_dict(self) -> dict:
        return {
            "search": "converse-3.1",
            "result": "hit" if self.hits else "none found",
            "instances_examined": self.instances,
            "improper_ideals_skipped": self.improper_skipped,
            "hits": self.hits,
            "analog": ANALOGS["converse-3.1"],
        }


def search_duplication_converse(rings: Iterable[FiniteRing], max_size: int = 256, method: str = "fast") -> SearchReport:
    """Look for R strong (A) with R ⋈ I not strong (A), I a proper ideal.

    I = R is skipped: R ⋈ R is R x R, which is never strong (A), and the
    transfer statement being tested only concerns proper ideals.
    """
    instances, skipped, hits = 0, 0, []
    for R in rings:
        if R.is_zero or R.size > max_size:
            continue
        base = None
        for I in all_ideals(R):
            if R.size * I.size > max_size:
                continue
            if not is_proper(I):
                skipped += 1
                continue
            instances += 1
            if base is None:
                base = _sa(R, method)
            if not base:
                continue
            S = duplication(R, I)
            if not _sa(S, method):
                hits.append({"ring": R.descriptor, "ideal": I.describe(), "duplication": S.descriptor})
    return SearchReport(instances, sorted(hits, key=lambda h: h["duplication"]), skipped)


CHECK_IDS = ("thm2.2", "lem2.6", "thm3.1", "ex2.1", "coincidence", "reduced", "full-dup", "regular-units")


def run_checks(check_id: str, corpus: list[FiniteRing], max_size: int = 256, method: str = "fast") -> list[CheckResult]:
    """Run one named check (or ``all``) over every eligible corpus instance."""
    ids = CHECK_IDS if check_id == "all" else (check_id,)
    for cid in ids:
        if cid not in CHECK_IDS:
            raise KeyError(cid)
    results: list[CheckResult] = []
    fields = [R for R in corpus if is_field(R)]
    for cid in ids:
        if cid == "thm2.2":
            for A in corpus:
                for k in (1, 2):
                    if A.size ** (k + 1) <= max_size:
                        results.append(check_free_idealization(A, k, method, max_size))
        elif cid == "lem2.6":
            for K in fields:
                for n in (1, 2, 3):
                    if K.size ** (n + 1) <= max_size:
                        results.append(check_field_idealization(K, n, method, max_size))
        elif cid == "thm3.1":
            for R in corpus:
                for I in all_ideals(R):
                    if R.size * I.size <= max_size:
                        results.append(check_duplication_transfer(R, I, method, max_size))
        elif cid == "ex2.1":
            for q in (2, 3, 4, 5):
                if q * q <= max_size:
                    Zq = zmod(q)
                    results.append(check_product_transfer(Zq, Zq, method, max_size))
            small = [R for R in corpus if R.size <= 16]
            for i, R1 in enumerate(small):
                for R2 in small[i:]:
                    if R1.size * R2.size <= max_size:
                        results.append(check_product_transfer(R1, R2, method, max_size))
        elif cid == "coincidence":
            for n, d in ((4, 2), (9, 3), (25, 5)):
                R = zmod(n)
                results.append(check_idealization_coincidence(R, ideal_generate(R, [d])))
            for R in corpus:
                for I in all_ideals(R):
                    if I.size > 1 and R.size * I.size <= max_size and _square_zero(R, I):
                        results.append(check_idealization_coincidence(R, I))
        elif cid == "reduced":
            for K in fields:
                if K.size ** 2 <= max_size:
                    results.append(check_duplication_reduced(K))
        elif cid == "full-dup":
            for R in corpus:
                if R.size ** 2 <= max_size:
                    results.append(check_full_duplication_product(R))
        elif cid == "regular-units":
            for R in corpus:
                results.append(check_regular_units(R))
    return _dedup_sorted(results)


def _square_zero(R: FiniteRing, I: Ideal) -> bool:
    return not (R.mul_table[np.ix_(list(I.members), list(I.members))] != 0).any()


def _dedup_sorted(results: list[CheckResult]) -> list[CheckResult]:
    seen, out = set(), []
    for r in sorted(results, key=lambda r: (r.check, r.instance)):
        if (r.check, r.instance) not in seen:
            seen.add((r.check, r.instance))
            out.append(r)
    return out


def reverify(result: CheckResult, method: str = "oracle") -> CheckResult:
    """Rebuild a result's instance from its descriptor and rerun the check."""
    from .expr import build_ring

    S = build_ring(result.instance)
    if result.check in ("thm2.2", "lem2.6"):
        A, E = S.parts
        fn = check_free_idealization if result.check == "thm2.2" else check_field_idealization
        return fn(A, E.parts[0], method, max_size=S.size)
    if result.check == "thm3.1":
        return check_duplication_transfer(*S.parts, method=method, max_size=S.size)
    if result.check == "ex2.1":
        return check_product_transfer(*S.parts, method=method, max_size=S.size)
    if result.check == "coincidence":
        return check_idealization_coincidence(*S.parts)
    if result.check == "reduced":
        return check_duplication_reduced(S)
    if result.check == "full-dup":
        return check_full_duplication_product(S.parts[0])
    if result.check == "regular-units":
        return check_regular_units(S)
    raise KeyError(result.check)


def corpus_axioms_ok(corpus: Iterable[FiniteRing], seed: int = 0) -> list[str]:
    """Descriptors of corpus rings failing the axiom check (should be empty)."""
    return [R.descriptor for R in corpus if not check_ring_axioms(R, seed=seed).ok]


def strong_a_matches_locality(R: FiniteRing, method: str = "fast") -> bool:
    return _sa(R, method) == is_local(R)
