"""Finite commutative unital rings stored as Cayley tables.

Every ring is a universe ``0..n-1`` of element indices together with
addition and multiplication tables. Index 0 is always the zero element.
A codec translates indices to structured display forms (ints, tuples for
pairs, lists for coefficient vectors) and back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

import numpy as np

from .errors import (
    DEFAULT_CAPS,
    DegenerateRingError,
    ElementError,
    ResourceCapError,
    RingMismatchError,
)

Form = Any  # int | tuple | list, nested


def format_element(form: Form) -> str:
    """Render a display form in the expression-literal syntax."""
    if isinstance(form, tuple):
        return "(" + ", ".join(format_element(f) for f in form) + ")"
    if isinstance(form, list):
        return "[" + ", ".join(format_element(f) for f in form) + "]"
    return str(int(form))


def table_dtype(n: int):
    return np.int16 if n <= np.iinfo(np.int16).max else np.int32


def build_tables(n: int, block_fn: Callable, dtype=None) -> tuple[np.ndarray, np.ndarray]:
    """Fill n x n add/mul tables row-block by row-block.

    ``block_fn(rows, cols)`` gets a column vector of row indices and a row
    vector of column indices and returns the (add, mul) blocks.
    """
    dtype = dtype or table_dtype(n)
    add = np.empty((n, n), dtype=dtype)
    mul = np.empty((n, n), dtype=dtype)
    cols = np.arange(n, dtype=np.int64)[None, :]
    step = max(1, (1 << 19) // max(n, 1))
    for start in range(0, n, step):
        rows = np.arange(start, min(n, start + step), dtype=np.int64)[:, None]
        a, m = block_fn(rows, cols)
        add[start:start + rows.shape[0]] = a
        mul[start:start + rows.shape[0]] = m
    return add, mul


def check_size(what: str, n: int, cap: int | None = None) -> None:
    cap = DEFAULT_CAPS.table if cap is None else cap
    if n > cap:
        raise ResourceCapError(what, n, cap)


class FiniteRing:
    """A finite commutative ring with identity, held as Cayley tables.

    Instances are immutable once built; derived data (unit masks and the
    like) is memoized in ``_cache`` and never changes the ring itself.
    """

    def __init__(
        self,
        descriptor: str,
        add_table: np.ndarray,
        mul_table: np.ndarray,
        one: int,
        decode: Callable[[int], Form] | None = None,
        encode: Callable[[Form], int] | None = None,
        kind: str = "custom",
        parts: tuple = (),
    ):
        n = add_table.shape[0]
        if n < 1 or add_table.shape != (n, n) or mul_table.shape != (n, n):
            raise ValueError("tables must be square and non-empty")
        self.descriptor = descriptor
        self.size = n
        self.add_table = np.ascontiguousarray(add_table, dtype=table_dtype(n))
        self.mul_table = np.ascontiguousarray(mul_table, dtype=table_dtype(n))
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.neg_table = np.argmax(self.add_table == 0, axis=1)
        self.neg_table.setflags(write=False)
        self.zero = 0
        self.one = int(one)
        self.kind = kind
        self.parts = parts
        self._decode = decode or int
        self._encode = encode or _int_encoder(n)
        self._cache: dict = {}

    @classmethod
    def from_tables(cls, add_table, mul_table, one: int, descriptor: str = "custom") -> "FiniteRing":
        """Wrap raw tables (used for fixtures such as corrupted rings)."""
        return cls(descriptor, np.asarray(add_table), np.asarray(mul_table), one)

    def __repr__(self) -> str:
        return f"<FiniteRing {self.descriptor} |R|={self.size}>"

    def __len__(self) -> int:
        return self.size

    def __call__(self, form: Form) -> "Element":
        return Element(self, self.encode(form))

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    def require_nonzero(self) -> None:
        if self.size == 1:
            raise DegenerateRingError(f"{self.descriptor} is the zero ring")

    # -- codec -------------------------------------------------------------

    def decode(self, x) -> Form:
        return self._decode(self.index_of(x))

    def encode(self, form: Form) -> int:
        if isinstance(form, Element):
            return self.index_of(form)
        idx = self._encode(form)
        return int(idx)

    def format(self, x) -> str:
        return format_element(self.decode(x))

    def index_of(self, x) -> int:
        """Validate an element handle and return its index."""
        if isinstance(x, Element):
            if x.ring is not self:
                raise RingMismatchError(f"element of another ring object ({x.ring.descriptor}) used in {self.descriptor}")
            return x.index
        if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
            raise ElementError(f"not an element index: {x!r}")
        if not 0 <= x < self.size:
            raise ElementError(f"index {x} out of range for ring of size {self.size}")
        return int(x)

    def element(self, i: int) -> "Element":
        return Element(self, self.index_of(i))

    def elements(self) -> Iterator["Element"]:
        return (Element(self, i) for i in range(self.size))

    # -- arithmetic on indices ---------------------------------------------

    def add(self, x, y) -> int:
        return int(self.add_table[self.index_of(x), self.index_of(y)])

    def mul(self, x, y) -> int:
        return int(self.mul_table[self.index_of(x), self.index_of(y)])

    def neg(self, x) -> int:
        return int(self.neg_table[self.index_of(x)])

    def sub(self, x, y) -> int:
        return self.add(x, self.neg(y))

    def power(self, x, k: int) -> int:
        x = self.index_of(x)
        acc = self.one
        for _ in range(k):
            acc = int(self.mul_table[acc, x])
        return acc

    # -- memoized masks ----------------------------------------------------

    def units_mask(self) -> np.ndarray:
        if "units" not in self._cache:
            m = (self.mul_table == self.one).any(axis=1)
            m.setflags(write=False)
            self._cache["units"] = m
        return self._cache["units"]

    def zero_divisor_mask(self) -> np.ndarray:
        """x is flagged iff x*y = 0 for some y != 0 (so 0 itself is flagged)."""
        if "zd" not in self._cache:
            m = (self.mul_table[:, 1:] == 0).any(axis=1)
            m.setflags(write=False)
            self._cache["zd"] = m
        return self._cache["zd"]

    def nilpotent_mask(self) -> np.ndarray:
        if "nil" not in self._cache:
            p = np.arange(self.size)
            # x^(2^j) for 2^j >= n settles every nilpotent at 0
            for _ in range(max(1, int(self.size).bit_length())):
                p = self.mul_table[p, p].astype(np.int64)
            m = p == 0
            m.setflags(write=False)
            self._cache["nil"] = m
        return self._cache["nil"]


def _int_encoder(n: int) -> Callable[[Form], int]:
    def encode(form):
        if isinstance(form, (bool, np.bool_)) or not isinstance(form, (int, np.integer)):
            raise ElementError(f"expected an integer literal, got {format_form_safe(form)}")
        if not 0 <= form < n:
            raise ElementError(f"index {form} out of range for ring of size {n}")
        return int(form)

    return encode


def format_form_safe(form: Form) -> str:
    try:
        return format_element(form)
    except (TypeError, ValueError):
        return repr(form)


class Element:
    """Convenience handle pairing an index with its ring.

    Supports ``+``, ``-`` and ``*``; mixing rings raises RingMismatchError.
    """

    __slots__ = ("ring", "index")

    def __init__(self, ring: FiniteRing, index: int):
        self.ring = ring
        self.index = index

    def _other(self, other) -> int:
        if isinstance(other, Element):
            return self.ring.index_of(other)
        return self.ring.encode(other)

    def __add__(self, other):
        return Element(self.ring, self.ring.add(self.index, self._other(other)))

    __radd__ = __add__

    def __mul__(self, other):
        return Element(self.ring, self.ring.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.index))

    def __sub__(self, other):
        return Element(self.ring, self.ring.sub(self.index, self._other(other)))

    def __pow__(self, k: int):
        return Element(self.ring, self.ring.power(self.index, k))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring is other.ring and self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __int__(self):
        return self.index

    def __index__(self):
        return self.index

    def __repr__(self):
        return f"Element({self.ring.format(self.index)})"

    @property
    def form(self) -> Form:
        return self.ring.decode(self.index)


# ---------------------------------------------------------------------------
# base ring and elementwise classification


def zmod(n: int, table_cap: int | None = None) -> FiniteRing:
    """The ring Z/n; index i is the residue i."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"Z/n needs an integer n >= 1, got {n!r}")
    check_size(f"Z/{n}", n, table_cap)

    def block(i, j):
        return (i + j) % n, (i * j) % n

    add, mul = build_tables(n, block)

    def encode(form):
        if isinstance(form, (bool, np.bool_)) or not isinstance(form, (int, np.integer)):
            raise ElementError(f"Z/{n} expects an integer literal, got {format_form_safe(form)}")
        return int(form) % n

    return FiniteRing(f"Z/{n}", add, mul, one=1 % n, encode=encode, kind="zmod", parts=(n,))


def is_unit(R: FiniteRing, x) -> bool:
    R.require_nonzero()
    return bool(R.units_mask()[R.index_of(x)])


def is_zero_divisor(R: FiniteRing, x) -> bool:
    """True iff x*y = 0 for some nonzero y. Zero counts as a zero-divisor."""
    R.require_nonzero()
    return bool(R.zero_divisor_mask()[R.index_of(x)])


def is_regular(R: FiniteRing, x) -> bool:
    return not is_zero_divisor(R, x)


def is_nilpotent(R: FiniteRing, x) -> bool:
    R.require_nonzero()
    return bool(R.nilpotent_mask()[R.index_of(x)])


def is_reduced(R: FiniteRing) -> bool:
    R.require_nonzero()
    return int(R.nilpotent_mask().sum()) == 1


def is_local(R: FiniteRing) -> bool:
    """True iff the non-units are closed under addition."""
    R.require_nonzero()
    nu = np.flatnonzero(~R.units_mask())
    sums = R.add_table[np.ix_(nu, nu)]
    return bool((~R.units_mask()[sums]).all())


def is_field(R: FiniteRing) -> bool:
    return R.size >= 2 and int(R.units_mask().sum()) == R.size - 1


# ---------------------------------------------------------------------------
# axiom checking


@dataclass
class AxiomReport:
    ring: str
    mode: str
    triples_checked: int
    failures: dict = field(default_factory=dict)  # axiom -> counterexample

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "mode": self.mode,
            "triples_checked": self.triples_checked,
            "ok": self.ok,
            "failures": {k: list(v) for k, v in sorted(self.failures.items())},
        }


AXIOMS = (
    "add_associative",
    "add_commutative",
    "add_identity",
    "add_inverse",
    "mul_associative",
    "mul_commutative",
    "mul_identity",
    "distributive",
)


def check_ring_axioms(
    R: FiniteRing,
    mode: str = "auto",
    samples: int | None = None,
    seed: int = 0,
    full_cap: int | None = None,
) -> AxiomReport:
    """Check the commutative-ring axioms on R; never raises.

    ``mode`` is ``"full"``, ``"sampled"`` or ``"auto"``. Full checks every
    triple and is only honoured up to ``full_cap`` elements; larger rings fall
    back to ``samples`` (default 10*|R|) random triples drawn with ``seed``.
    """
    n = R.size
    cap = DEFAULT_CAPS.axiom_full if full_cap is None else full_cap
    if mode not in ("auto", "full", "sampled"):
        raise ValueError(f"unknown axiom-check mode {mode!r}")
    use_full = mode != "sampled" and n <= cap
    A, M = R.add_table.astype(np.int64), R.mul_table.astype(np.int64)
    failures: dict[str, tuple] = {}
    ar = np.arange(n)

    def note(name, bad, triple_of):
        if name not in failures and bad.any():
            failures[name] = triple_of(np.argwhere(bad)[0])

    # pairwise and single-element axioms are always checked exhaustively
    note("add_commutative", A != A.T, lambda w: (int(w[0]), int(w[1])))
    note("mul_commutative", M != M.T, lambda w: (int(w[0]), int(w[1])))
    note("add_identity", A[0] != ar, lambda w: (int(w[0]),))
    note("mul_identity", M[R.one] != ar, lambda w: (int(w[0]),))
    note("add_inverse", A[ar, R.neg_table] != 0, lambda w: (int(w[0]),))

    if use_full:
        for a in range(n):
            na = A[a]
            note("add_associative", A[na] != na[A], lambda w, a=a: (a, int(w[0]), int(w[1])))
            ma = M[a]
            note("mul_associative", M[ma] != ma[M], lambda w, a=a: (a, int(w[0]), int(w[1])))
            note("distributive", ma[A] != A[ma[:, None], ma[None, :]], lambda w, a=a: (a, int(w[0]), int(w[1])))
            if len(failures) == len(AXIOMS):
                break
        return AxiomReport(R.descriptor, "full", n ** 3, failures)

    k = samples if samples is not None else 10 * n
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, k))

    def note_triples(name, bad):
        if name not in failures and bad.any():
            i = int(np.flatnonzero(bad)[0])
            failures[name] = (int(a[i]), int(b[i]), int(c[i]))

    note_triples("add_associative", A[A[a, b], c] != A[a, A[b, c]])
    note_triples("mul_associative", M[M[a, b], c] != M[a, M[b, c]])
    note_triples("distributive", M[a, A[b, c]] != A[M[a, b], M[a, c]])
    return AxiomReport(R.descriptor, f"sampled({k})", k, failures)


