"""Finite modules over finite rings: free powers, quotients, ideals, sums.

These are the E in the trivial extension A ∝ E. A module keeps an addition
table over its own universe and a scalar table ``smul[a, e]``.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .errors import ElementError, PreconditionError, RingMismatchError
from .ideals import Ideal
from .ring import FiniteRing, check_size, format_element, format_form_safe, table_dtype


class RingModule:
    def __init__(
        self,
        base: FiniteRing,
        descriptor: str,
        add_table: np.ndarray,
        smul_table: np.ndarray,
        decode: Callable,
        encode: Callable,
        kind: str,
        parts: tuple = (),
        basis: tuple[int, ...] = (),
    ):
        m = add_table.shape[0]
        self.base = base
        self.descriptor = descriptor
        self.size = m
        self.add_table = np.ascontiguousarray(add_table, dtype=table_dtype(m))
        self.smul_table = np.ascontiguousarray(smul_table, dtype=table_dtype(m))
        self.add_table.setflags(write=False)
        self.smul_table.setflags(write=False)
        self.neg_table = np.argmax(self.add_table == 0, axis=1)
        self._decode = decode
        self._encode = encode
        self.kind = kind
        self.parts = parts
        self.basis = basis

    def __repr__(self):
        return f"<RingModule {self.descriptor} over {self.base.descriptor}, |E|={self.size}>"

    def decode(self, i: int):
        return self._decode(int(i))

    def encode(self, form) -> int:
        return int(self._encode(form))

    def format(self, i: int) -> str:
        return format_element(self.decode(i))

    def axiom_failures(self) -> list[str]:
        """Exhaustively check the module axioms; returns the names that fail."""
        A, E = self.base, self
        Ea, S = E.add_table.astype(np.int64), E.smul_table.astype(np.int64)
        bad = []
        ar = np.arange(E.size)
        if (Ea != Ea.T).any() or (Ea[0] != ar).any():
            bad.append("abelian_group")
        elif any((Ea[Ea[e]] != Ea[e][Ea]).any() for e in range(E.size)):
            bad.append("abelian_group")
        # a(e+f) = ae + af
        if any((S[a][Ea] != Ea[S[a][:, None], S[a][None, :]]).any() for a in range(A.size)):
            bad.append("scalar_distributes_over_vectors")
        # (a+b)e = ae + be
        if (S[A.add_table.astype(np.int64)] != Ea[S[:, None, :], S[None, :, :]]).any():
            bad.append("vector_distributes_over_scalars")
        # (ab)e = a(be)
        if (S[A.mul_table.astype(np.int64)] != S[np.arange(A.size)[:, None, None], S[None, :, :]]).any():
            bad.append("scalar_associative")
        if (S[A.one] != ar).any():
            bad.append("unital")
        return bad


def _check_module_size(A: FiniteRing, what: str, m: int) -> None:
    check_size(what, m)


def _mixed_radix_encoder(radices: Sequence[int], encoders: Sequence[Callable], what: str):
    def encode(form):
        if not isinstance(form, (list, tuple)) or len(form) != len(radices):
            raise ElementError(f"{what} expects a vector of length {len(radices)}, got {format_form_safe(form)}")
        idx = 0
        for r, enc, f in zip(radices, encoders, form):
            idx = idx * r + enc(f)
        return idx

    return encode


def _digits(idx: np.ndarray, radices: Sequence[int]) -> list[np.ndarray]:
    """Split mixed-radix indices (first radix most significant)."""
    out = []
    for r in reversed(radices):
        idx, d = np.divmod(idx, r)
        out.append(d)
    return out[::-1]


def module_free(A: FiniteRing, k: int) -> RingModule:
    """A^k with the standard basis c_1..c_k."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"free module rank must be >= 1, got {k!r}")
    n = A.size
    m = n ** k
    _check_module_size(A, f"free({k}) over {A.descriptor}", m)
    radices = [n] * k
    digits = _digits(np.arange(m, dtype=np.int64), radices)
    Aa, Am = A.add_table.astype(np.int64), A.mul_table.astype(np.int64)
    add = np.zeros((m, m), dtype=np.int64)
    smul = np.zeros((n, m), dtype=np.int64)
    for d in digits:
        add = add * n + Aa[d[:, None], d[None, :]]
        smul = smul * n + Am[:, d]
    basis = tuple(int(A.one) * n ** (k - 1 - t) for t in range(k))

    def decode(i):
        return [A.decode(int(d[i])) for d in digits]

    enc = _mixed_radix_encoder(radices, [A.encode] * k, f"free({k})")

    def encode(form):
        if k == 1 and not isinstance(form, (list, tuple)):
            form = [form]
        return enc(form)

    return RingModule(A, f"free({k})", add, smul, decode, encode, "free", (k,), basis)


def coset_index(add_table: np.ndarray, mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coset id of every element modulo the subgroup ``mask``, plus representatives.

    Cosets are numbered in order of their least element, which is also the
    representative.
    """
    n = add_table.shape[0]
    members = np.flatnonzero(mask)
    cid = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in range(n):
        if cid[x] < 0:
            cid[add_table[x, members]] = len(reps)
            reps.append(x)
    return cid, np.array(reps, dtype=np.int64)


def module_quotient(A: FiniteRing, I: Ideal) -> RingModule:
    """A/I as an A-module; each element is shown by its least representative."""
    if I.ring is not A:
        raise RingMismatchError("ideal does not belong to the base ring")
    cid, reps = coset_index(A.add_table, I.mask)
    add = cid[A.add_table[reps[:, None], reps[None, :]]]
    smul = cid[A.mul_table[:, reps]]

    def decode(i):
        return A.decode(int(reps[i]))

    def encode(form):
        return int(cid[A.encode(form)])

    return RingModule(A, f"quotmod({I.describe()})", add, smul, decode, encode, "quotient", (I,))


def module_ideal(A: FiniteRing, I: Ideal) -> RingModule:
    """The ideal I viewed as an A-submodule of A, members in index order."""
    if I.ring is not A:
        raise RingMismatchError("ideal does not belong to the base ring")
    members = np.array(I.members, dtype=np.int64)
    pos = np.full(A.size, -1, dtype=np.int64)
    pos[members] = np.arange(len(members))
    add = pos[A.add_table[members[:, None], members[None, :]]]
    smul = pos[A.mul_table[:, members]]

    def decode(i):
        return A.decode(int(members[i]))

    def encode(form):
        x = A.encode(form)
        if pos[x] < 0:
            raise ElementError(f"{A.format(x)} is not in {I.describe()}")
        return int(pos[x])

    return RingModule(A, f"idealmod({I.describe()})", add, smul, decode, encode, "ideal", (I,))


def module_direct_sum(mods: Sequence[RingModule]) -> RingModule:
    mods = list(mods)
    if not mods:
        raise PreconditionError("direct sum needs at least one summand")
    A = mods[0].base
    if any(M.base is not A for M in mods):
        raise RingMismatchError("direct summands must share the base ring")
    radices = [M.size for M in mods]
    m = int(np.prod(radices))
    _check_module_size(A, "dsum", m)
    digits = _digits(np.arange(m, dtype=np.int64), radices)
    add = np.zeros((m, m), dtype=np.int64)
    smul = np.zeros((A.size, m), dtype=np.int64)
    for M, r, d in zip(mods, radices, digits):
        add = add * r + M.add_table[d[:, None], d[None, :]]
        smul = smul * r + M.smul_table[:, d]

    def decode(i):
        return [M.decode(int(d[i])) for M, d in zip(mods, digits)]

    encode = _mixed_radix_encoder(radices, [M.encode for M in mods], "dsum")
    desc = "dsum(" + ", ".join(M.descriptor for M in mods) + ")"
    return RingModule(A, desc, add, smul, decode, encode, "dsum", tuple(mods))
