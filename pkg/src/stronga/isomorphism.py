"""Brute-force ring isomorphism for small rings.

The search fixes 1 -> 1, picks an additive generating set of the first
ring, and backtracks over images of the generators among elements with the
same invariant signature. Each partial assignment is propagated to the
additive span and pruned on additive and multiplicative consistency.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .errors import DEFAULT_CAPS, ResourceCapError
from .ring import FiniteRing


def additive_orders(R: FiniteRing) -> np.ndarray:
    ar = np.arange(R.size)
    order = np.zeros(R.size, dtype=np.int64)
    cur = ar.copy()
    for k in range(1, R.size + 1):
        hit = (cur == 0) & (order == 0)
        order[hit] = k
        if (order > 0).all():
            break
        cur = R.add_table[cur, ar].astype(np.int64)
    return order


def element_signatures(R: FiniteRing) -> list[tuple]:
    """Per-element invariants preserved by every ring isomorphism."""
    if "sig" in R._cache:
        return R._cache["sig"]
    M = R.mul_table
    order = additive_orders(R)
    ann = (M == 0).sum(axis=1)
    principal = np.array([len(np.unique(M[x])) for x in range(R.size)])
    sq = M[np.arange(R.size), np.arange(R.size)]
    units = R.units_mask()
    nil = R.nilpotent_mask()
    idem = sq == np.arange(R.size)
    sigs = [
        (int(order[x]), int(ann[x]), int(principal[x]), bool(units[x]), bool(nil[x]),
         bool(idem[x]), int(order[sq[x]]), int(ann[sq[x]]))
        for x in range(R.size)
    ]
    R._cache["sig"] = sigs
    return sigs


def fingerprint(R: FiniteRing) -> tuple:
    """Isomorphism-invariant summary used to bucket rings before searching."""
    return (R.size, tuple(sorted(Counter(element_signatures(R)).items())))


def _additive_generators(R: FiniteRing, order: np.ndarray) -> list[int]:
    gens = [R.one]
    span = _span(R, [R.one])
    while not span.all():
        rest = np.flatnonzero(~span)
        best = rest[np.argmax(order[rest])]  # first of maximal order
        gens.append(int(best))
        span = _span(R, gens)
    return gens


def _span(R: FiniteRing, gens) -> np.ndarray:
    mask = np.zeros(R.size, dtype=bool)
    mask[0] = True
    for g in gens:
        members = np.flatnonzero(mask)
        cyc, x = [0], g
        while x != 0:
            cyc.append(x)
            x = int(R.add_table[x, g])
        s = R.add_table[np.ix_(members, np.array(cyc))]
        mask[s.ravel()] = True
    return mask


def find_isomorphism(R1: FiniteRing, R2: FiniteRing, cap: int | None = None) -> np.ndarray | None:
    """Return phi with phi[x] in R2 for x in R1, or None if not isomorphic."""
    cap = DEFAULT_CAPS.isomorphism if cap is None else cap
    if R1.size != R2.size:
        return None
    if R1.size > cap:
        raise ResourceCapError("isomorphism search", R1.size, cap)
    if fingerprint(R1) != fingerprint(R2):
        return None
    n = R1.size
    s1, s2 = element_signatures(R1), element_signatures(R2)
    A1, M1 = R1.add_table, R1.mul_table
    A2, M2 = R2.add_table, R2.mul_table
    gens = _additive_generators(R1, additive_orders(R1))
    by_sig: dict[tuple, list[int]] = {}
    for y in range(n):
        by_sig.setdefault(s2[y], []).append(y)

    def extend(phi: np.ndarray, g: int, h: int) -> np.ndarray | None:
        phi = phi.copy()
        defined = np.flatnonzero(phi >= 0)
        used = np.zeros(n, dtype=bool)
        used[phi[defined]] = True
        xs, ys = defined, phi[defined]
        while True:
            xs = A1[xs, g].astype(np.int64)
            ys = A2[ys, h].astype(np.int64)
            known = phi[xs] >= 0
            if (phi[xs[known]] != ys[known]).any():
                return None
            new = ~known
            if not new.any():
                break
            xs, ys = xs[new], ys[new]
            if used[ys].any() or len(np.unique(ys)) != len(ys):
                return None
            phi[xs] = ys
            used[ys] = True
        dom = np.flatnonzero(phi >= 0)
        prod = M1[np.ix_(dom, dom)]
        img = M2[np.ix_(phi[dom], phi[dom])]
        inside = phi[prod] >= 0
        if (phi[prod][inside] != img[inside]).any():
            return None
        for x, y in zip(prod[~inside][:64], img[~inside][:64]):
            if s1[x] != s2[y]:
                return None
        return phi

    def search(phi: np.ndarray, depth: int) -> np.ndarray | None:
        if depth == len(gens):
            if (phi < 0).any():
                return None
            ok = (phi[A1] == A2[np.ix_(phi, phi)]).all() and (phi[M1] == M2[np.ix_(phi, phi)]).all()
            return phi if ok else None
        g = gens[depth]
        for h in by_sig.get(s1[g], []):
            if phi[g] >= 0 and phi[g] != h:
                continue
            nxt = extend(phi, g, h)
            if nxt is not None:
                found = search(nxt, depth + 1)
                if found is not None:
                    return found
        return None

    start = np.full(n, -1, dtype=np.int64)
    start[0] = 0
    if s1[R1.one] != s2[R2.one]:
        return None
    start = extend(start, R1.one, R2.one)
    if start is None:
        return None
    return search(start, 1)


def ring_isomorphic(R1: FiniteRing, R2: FiniteRing, cap: int | None = None) -> bool:
    return find_isomorphism(R1, R2, cap) is not None
