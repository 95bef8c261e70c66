"""Ring constructions: products, quotients, monic polynomial quotients,
trivial extensions A ∝ E and amalgamated duplications R ⋈ I.

All constructors are pure: they read the operands' tables and return a new
FiniteRing whose descriptor is the canonical construction expression.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DegenerateRingError, ElementError, PreconditionError, RingMismatchError
from .ideals import Ideal
from .modules import RingModule, coset_index
from .ring import FiniteRing, build_tables, check_size, format_element, format_form_safe


def _pair_encoder(enc1, enc2, what: str):
    def encode(form):
        if not isinstance(form, tuple) or len(form) != 2:
            raise ElementError(f"{what} expects a pair literal (x, y), got {format_form_safe(form)}")
        return enc1(form[0]), enc2(form[1])

    return encode


def product(R1: FiniteRing, R2: FiniteRing) -> FiniteRing:
    """Direct product with componentwise operations; index = i1*|R2| + i2."""
    if R1.is_zero or R2.is_zero:
        raise DegenerateRingError("product with the zero ring")
    n1, n2 = R1.size, R2.size
    check_size(f"product of {R1.descriptor} and {R2.descriptor}", n1 * n2)
    A1, M1 = R1.add_table, R1.mul_table
    A2, M2 = R2.add_table, R2.mul_table

    def block(i, j):
        i1, i2 = np.divmod(i, n2)
        j1, j2 = np.divmod(j, n2)
        add = A1[i1, j1].astype(np.int64) * n2 + A2[i2, j2]
        mul = M1[i1, j1].astype(np.int64) * n2 + M2[i2, j2]
        return add, mul

    add, mul = build_tables(n1 * n2, block)
    pair = _pair_encoder(R1.encode, R2.encode, "product")

    def encode(form):
        a, b = pair(form)
        return a * n2 + b

    def decode(i):
        a, b = divmod(i, n2)
        return (R1.decode(a), R2.decode(b))

    return FiniteRing(
        f"product({R1.descriptor}, {R2.descriptor})", add, mul, R1.one * n2 + R2.one,
        decode, encode, kind="product", parts=(R1, R2),
    )


def quotient(R: FiniteRing, I: Ideal) -> FiniteRing:
    """R/I on cosets, each represented by its least element index.

    R/R is returned as the zero ring; check ``is_zero`` on the result.
    """
    if I.ring is not R:
        raise RingMismatchError("ideal does not belong to this ring")
    cid, reps = coset_index(R.add_table, I.mask)
    A, M = R.add_table, R.mul_table

    def block(i, j):
        ri, rj = reps[i], reps[j]
        return cid[A[ri, rj]], cid[M[ri, rj]]

    add, mul = build_tables(len(reps), block)

    def decode(i):
        return R.decode(int(reps[i]))

    def encode(form):
        return int(cid[R.encode(form)])

    return FiniteRing(
        f"quot({R.descriptor}, {I.describe()})", add, mul, int(cid[R.one]),
        decode, encode, kind="quotient", parts=(R, I),
    )


def poly_quotient(R: FiniteRing, f: Sequence) -> FiniteRing:
    """R[X]/(f) for monic f given by coefficients, constant term first.

    Elements are coefficient vectors [c0, ..., c_{n-1}] with index
    sum(c_i * |R|^i).
    """
    try:
        coeffs = [R.encode(c) for c in f]
    except ElementError as exc:
        raise ElementError(f"bad polynomial coefficient: {exc}") from None
    if len(coeffs) < 2:
        raise PreconditionError("modulus must have degree >= 1")
    if coeffs[-1] != R.one:
        raise PreconditionError("modulus polynomial must be monic")
    deg = len(coeffs) - 1
    r = R.size
    size = r ** deg
    desc = f"polyquot({R.descriptor}, {format_element([R.decode(c) for c in coeffs])})"
    check_size(desc, size)
    A, M, N = R.add_table, R.mul_table, R.neg_table
    low = np.array(coeffs[:-1], dtype=np.int64)
    weights = [r ** t for t in range(deg)]

    def split(idx):
        return [(idx // w) % r for w in weights]

    def block(i, j):
        ci, cj = split(i), split(j)
        shape = np.broadcast(i, j).shape
        add = np.zeros(shape, dtype=np.int64)
        for t in range(deg):
            add += A[ci[t], cj[t]].astype(np.int64) * weights[t]
        prod = [np.zeros(shape, dtype=np.int64) for _ in range(2 * deg - 1)]
        for s in range(deg):
            for t in range(deg):
                prod[s + t] = A[prod[s + t], M[ci[s], cj[t]]]
        for d in range(2 * deg - 2, deg - 1, -1):
            lead = prod[d]
            for t in range(deg):
                # X^d = -sum f_t X^(d-deg+t)
                prod[d - deg + t] = A[prod[d - deg + t], N[M[lead, low[t]]]]
        mul = np.zeros(shape, dtype=np.int64)
        for t in range(deg):
            mul += prod[t].astype(np.int64) * weights[t]
        return add, mul

    add, mul = build_tables(size, block)

    def decode(i):
        return [R.decode((i // w) % r) for w in weights]

    def encode(form):
        if not isinstance(form, list) or len(form) > deg:
            raise ElementError(f"expected a coefficient vector of length <= {deg}, got {format_form_safe(form)}")
        return sum(R.encode(c) * w for c, w in zip(form, weights))

    return FiniteRing(desc, add, mul, R.one, decode, encode, kind="polyquot", parts=(R, tuple(coeffs)))


def idealization(A: FiniteRing, E: RingModule) -> FiniteRing:
    """Trivial extension A ∝ E: pairs (a, e), (a,e)(b,f) = (ab, af + be)."""
    if E.base is not A:
        raise RingMismatchError(f"module {E.descriptor} is over another ring object ({E.base.descriptor}), not this {A.descriptor}")
    nA, nE = A.size, E.size
    desc = f"idealize({A.descriptor}, {E.descriptor})"
    check_size(desc, nA * nE)
    Aa, Am = A.add_table, A.mul_table
    Ea, Es = E.add_table, E.smul_table

    def block(i, j):
        a, e = np.divmod(i, nE)
        b, f = np.divmod(j, nE)
        add = Aa[a, b].astype(np.int64) * nE + Ea[e, f]
        mul = Am[a, b].astype(np.int64) * nE + Ea[Es[a, f], Es[b, e]]
        return add, mul

    add, mul = build_tables(nA * nE, block)
    pair = _pair_encoder(A.encode, E.encode, "idealize")

    def encode(form):
        a, e = pair(form)
        return a * nE + e

    def decode(i):
        a, e = divmod(i, nE)
        return (A.decode(a), E.decode(e))

    return FiniteRing(desc, add, mul, A.one * nE, decode, encode, kind="idealize", parts=(A, E))


def duplication(R: FiniteRing, I: Ideal) -> FiniteRing:
    """Amalgamated duplication R ⋈ I in (r, e) coordinates, e in I.

    (r, e)(s, f) = (rs, rf + se + ef); the pair (r, e) stands for
    (r, r + e) in R x R, see ``duplication_view``.
    """
    if I.ring is not R:
        raise RingMismatchError("ideal does not belong to this ring")
    members = np.array(I.members, dtype=np.int64)
    k = len(members)
    pos = np.full(R.size, -1, dtype=np.int64)
    pos[members] = np.arange(k)
    desc = f"dup({R.descriptor}, {I.describe()})"
    check_size(desc, R.size * k)
    A, M = R.add_table, R.mul_table

    def block(i, j):
        r, ei = np.divmod(i, k)
        s, fj = np.divmod(j, k)
        e, f = members[ei], members[fj]
        add = A[r, s].astype(np.int64) * k + pos[A[e, f]]
        cross = A[A[M[r, f], M[s, e]], M[e, f]]
        mul = M[r, s].astype(np.int64) * k + pos[cross]
        return add, mul

    add, mul = build_tables(R.size * k, block)

    def encode(form):
        if not isinstance(form, tuple) or len(form) != 2:
            raise ElementError(f"dup expects a pair literal (r, e), got {format_form_safe(form)}")
        r, e = R.encode(form[0]), R.encode(form[1])
        if pos[e] < 0:
            raise ElementError(f"second coordinate {R.format(e)} is not in {I.describe()}")
        return r * k + int(pos[e])

    def decode(i):
        r, e = divmod(i, k)
        return (R.decode(r), R.decode(int(members[e])))

    return FiniteRing(desc, add, mul, R.one * k, decode, encode, kind="dup", parts=(R, I))


def duplication_view(S: FiniteRing, x) -> tuple[int, int]:
    """The pair (r, r + e) in R x R for an element (r, e) of R ⋈ I."""
    if S.kind != "dup":
        raise PreconditionError(f"{S.descriptor} is not a duplication")
    R, I = S.parts
    r, e = divmod(S.index_of(x), I.size)
    return r, R.add(r, I.members[e])


def duplication_projection(S: FiniteRing) -> np.ndarray:
    """Index map of the first projection (r, e) -> r onto R."""
    if S.kind != "dup":
        raise PreconditionError(f"{S.descriptor} is not a duplication")
    R, I = S.parts
    return np.arange(S.size) // I.size
