"""Ring-construction expressions: tokenizer, parser, printer, elaboration.

Grammar::

    expr   := "Z/" INT | "product(" expr "," expr ")" | "quot(" expr "," ideal ")"
            | "polyquot(" expr "," vec ")" | "idealize(" expr "," module ")"
            | "dup(" expr "," ideal ")"
    ideal  := "ideal(" [elem {"," elem}] ")"
    module := "free(" INT ")" | "quotmod(" ideal ")" | "idealmod(" ideal ")"
            | "dsum(" module {"," module} ")"
    elem   := INT | "(" elem "," elem ")" | "[" elem {"," elem} "]"

Element literals are checked against the ring they live in when the
expression is elaborated; errors carry line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .constructions import duplication, idealization, poly_quotient, product, quotient
from .errors import ElementError, PreconditionError, RingError
from .ideals import Ideal, ideal_generate
from .modules import RingModule, module_direct_sum, module_free, module_ideal, module_quotient
from .ring import FiniteRing, zmod


class ExprSyntaxError(RingError, ValueError):
    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = offset
        self.line, self.column = line_col(text, offset)
        self.message = message
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class ElaborationError(RingError, ValueError):
    """A well-formed expression that does not denote a valid ring."""

    def __init__(self, message: str, text: str | None, offset: int | None):
        self.message = message
        if text is not None and offset is not None:
            self.line, self.column = line_col(text, offset)
            message = f"{message} at line {self.line}, column {self.column}"
        else:
            self.line = self.column = None
        super().__init__(message)


def line_col(text: str, offset: int) -> tuple[int, int]:
    before = text[:offset]
    line = before.count("\n") + 1
    return line, offset - (before.rfind("\n") + 1) + 1


# -- AST ---------------------------------------------------------------------------

_span = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class IntLit:
    value: int
    pos: int = _span


@dataclass(frozen=True)
class PairLit:
    left: "ElemLit"
    right: "ElemLit"
    pos: int = _span


@dataclass(frozen=True)
class VecLit:
    items: tuple["ElemLit", ...]
    pos: int = _span


ElemLit = Union[IntLit, PairLit, VecLit]


@dataclass(frozen=True)
class IdealLit:
    elems: tuple[ElemLit, ...]
    pos: int = _span


@dataclass(frozen=True)
class Zmod:
    n: int
    pos: int = _span


@dataclass(frozen=True)
class Product:
    left: "RingExpr"
    right: "RingExpr"
    pos: int = _span


@dataclass(frozen=True)
class Quot:
    ring: "RingExpr"
    ideal: IdealLit
    pos: int = _span


@dataclass(frozen=True)
class PolyQuot:
    ring: "RingExpr"
    coeffs: VecLit
    pos: int = _span


@dataclass(frozen=True)
class Idealize:
    ring: "RingExpr"
    module: "ModuleExpr"
    pos: int = _span


@dataclass(frozen=True)
class Dup:
    ring: "RingExpr"
    ideal: IdealLit
    pos: int = _span


@dataclass(frozen=True)
class Free:
    rank: int
    pos: int = _span


@dataclass(frozen=True)
class QuotMod:
    ideal: IdealLit
    pos: int = _span


@dataclass(frozen=True)
class IdealMod:
    ideal: IdealLit
    pos: int = _span


@dataclass(frozen=True)
class DSum:
    summands: tuple["ModuleExpr", ...]
    pos: int = _span


RingExpr = Union[Zmod, Product, Quot, PolyQuot, Idealize, Dup]
ModuleExpr = Union[Free, QuotMod, IdealMod, DSum]


# -- tokenizer / parser --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[()\[\],/]))")
RING_HEADS = ("product", "quot", "polyquot", "idealize", "dup")
MODULE_HEADS = ("free", "quotmod", "idealmod", "dsum")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                rest = text[pos:]
                if rest.strip():
                    off = pos + (len(rest) - len(rest.lstrip()))
                    raise ExprSyntaxError(f"unexpected character {text[off]!r}", text, off)
                break
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.toks.append(("eof", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        kind, val, pos = self.peek()
        got = "end of input" if kind == "eof" else repr(val)
        raise ExprSyntaxError(f"expected {expected}, found {got}", self.text, pos)

    def expect(self, val: str) -> int:
        kind, v, pos = self.peek()
        if v != val or kind == "eof":
            self.fail(repr(val))
        self.i += 1
        return pos

    def integer(self) -> int:
        kind, v, _ = self.peek()
        if kind != "int":
            self.fail("an integer")
        self.i += 1
        return int(v)

    def ring(self) -> RingExpr:
        kind, v, pos = self.peek()
        if kind == "name" and v == "Z":
            self.i += 1
            self.expect("/")
            return Zmod(self.integer(), pos)
        if kind == "name" and v in RING_HEADS:
            self.i += 1
            self.expect("(")
            base = self.ring()
            self.expect(",")
            if v == "product":
                node = Product(base, self.ring(), pos)
            elif v in ("quot", "dup"):
                node = (Quot if v == "quot" else Dup)(base, self.ideal(), pos)
            elif v == "polyquot":
                lit = self.elem()
                if not isinstance(lit, VecLit):
                    raise ExprSyntaxError("expected a coefficient vector [c0, ..., 1]", self.text, lit.pos)
                node = PolyQuot(base, lit, pos)
            else:
                node = Idealize(base, self.module(), pos)
            self.expect(")")
            return node
        self.fail("a ring expression ('Z/n', " + ", ".join(f"'{h}('" for h in RING_HEADS) + ")")

    def ideal(self) -> IdealLit:
        kind, v, pos = self.peek()
        if not (kind == "name" and v == "ideal"):
            self.fail("'ideal('")
        self.i += 1
        self.expect("(")
        elems = []
        if self.peek()[1] != ")":
            elems.append(self.elem())
            while self.peek()[1] == ",":
                self.i += 1
                elems.append(self.elem())
        self.expect(")")
        return IdealLit(tuple(elems), pos)

    def module(self) -> ModuleExpr:
        kind, v, pos = self.peek()
        if not (kind == "name" and v in MODULE_HEADS):
            self.fail("a module ('free(', 'quotmod(', 'idealmod(', 'dsum(')")
        self.i += 1
        self.expect("(")
        if v == "free":
            node = Free(self.integer(), pos)
        elif v == "quotmod":
            node = QuotMod(self.ideal(), pos)
        elif v == "idealmod":
            node = IdealMod(self.ideal(), pos)
        else:
            mods = [self.module()]
            while self.peek()[1] == ",":
                self.i += 1
                mods.append(self.module())
            node = DSum(tuple(mods), pos)
        self.expect(")")
        return node

    def elem(self) -> ElemLit:
        kind, v, pos = self.peek()
        if kind == "int":
            self.i += 1
            return IntLit(int(v), pos)
        if v == "(" and kind == "punct":
            self.i += 1
            left = self.elem()
            self.expect(",")
            right = self.elem()
            self.expect(")")
            return PairLit(left, right, pos)
        if v == "[" and kind == "punct":
            self.i += 1
            items = [self.elem()]
            while self.peek()[1] == ",":
                self.i += 1
                items.append(self.elem())
            self.expect("]")
            return VecLit(tuple(items), pos)
        self.fail("an element literal")

    def done(self):
        if self.peek()[0] != "eof":
            self.fail("end of input")


def parse_ring_expr(text: str) -> RingExpr:
    p = _Parser(text)
    node = p.ring()
    p.done()
    return node


def parse_element(text: str) -> ElemLit:
    p = _Parser(text)
    node = p.elem()
    p.done()
    return node


# -- printing ---------------------------------------------------------------------------


def pretty(node) -> str:
    """Canonical text; parse(pretty(t)) == t."""
    if isinstance(node, Zmod):
        return f"Z/{node.n}"
    if isinstance(node, Product):
        return f"product({pretty(node.left)}, {pretty(node.right)})"
    if isinstance(node, Quot):
        return f"quot({pretty(node.ring)}, {pretty(node.ideal)})"
    if isinstance(node, Dup):
        return f"dup({pretty(node.ring)}, {pretty(node.ideal)})"
    if isinstance(node, PolyQuot):
        return f"polyquot({pretty(node.ring)}, {pretty(node.coeffs)})"
    if isinstance(node, Idealize):
        return f"idealize({pretty(node.ring)}, {pretty(node.module)})"
    if isinstance(node, IdealLit):
        return "ideal(" + ", ".join(pretty(e) for e in node.elems) + ")"
    if isinstance(node, Free):
        return f"free({node.rank})"
    if isinstance(node, QuotMod):
        return f"quotmod({pretty(node.ideal)})"
    if isinstance(node, IdealMod):
        return f"idealmod({pretty(node.ideal)})"
    if isinstance(node, DSum):
        return "dsum(" + ", ".join(pretty(m) for m in node.summands) + ")"
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, PairLit):
        return f"({pretty(node.left)}, {pretty(node.right)})"
    if isinstance(node, VecLit):
        return "[" + ", ".join(pretty(e) for e in node.items) + "]"
    raise TypeError(f"not an expression node: {node!r}")


def literal_form(node: ElemLit):
    """Python display form of an element literal (int, tuple or list)."""
    if isinstance(node, IntLit):
        return node.value
    if isinstance(node, PairLit):
        return (literal_form(node.left), literal_form(node.right))
    return [literal_form(e) for e in node.items]


# -- elaboration -------------------------------------------------------------------------


class _Elaborator:
    def __init__(self, text: str | None):
        self.text = text

    def err(self, msg: str, pos: int):
        return ElaborationError(msg, self.text, pos)

    def element(self, R: FiniteRing, lit: ElemLit) -> int:
        try:
            return R.encode(literal_form(lit))
        except ElementError as exc:
            raise self.err(f"invalid element {pretty(lit)} in {R.descriptor}: {exc}", lit.pos) from None

    def ideal(self, R: FiniteRing, lit: IdealLit) -> Ideal:
        return ideal_generate(R, [self.element(R, e) for e in lit.elems])

    def module(self, A: FiniteRing, node: ModuleExpr) -> RingModule:
        try:
            if isinstance(node, Free):
                if node.rank < 1:
                    raise self.err("free module rank must be >= 1", node.pos)
                return module_free(A, node.rank)
            if isinstance(node, QuotMod):
                return module_quotient(A, self.ideal(A, node.ideal))
            if isinstance(node, IdealMod):
                return module_ideal(A, self.ideal(A, node.ideal))
            return module_direct_sum([self.module(A, m) for m in node.summands])
        except PreconditionError as exc:
            raise self.err(str(exc), node.pos) from None

    def ring(self, node: RingExpr) -> FiniteRing:
        try:
            if isinstance(node, Zmod):
                if node.n < 1:
                    raise self.err("Z/n needs n >= 1", node.pos)
                return zmod(node.n)
            if isinstance(node, Product):
                return product(self.ring(node.left), self.ring(node.right))
            base = self.ring(node.ring)
            if isinstance(node, Quot):
                return quotient(base, self.ideal(base, node.ideal))
            if isinstance(node, Dup):
                return duplication(base, self.ideal(base, node.ideal))
            if isinstance(node, PolyQuot):
                coeffs = [self.element(base, c) for c in node.coeffs.items]
                return poly_quotient(base, coeffs)
            return idealization(base, self.module(base, node.module))
        except PreconditionError as exc:
            raise self.err(str(exc), node.pos) from None


def elaborate(node: RingExpr, text: str | None = None) -> FiniteRing:
    """Build the ring an AST denotes. ``text`` is used for error positions."""
    return _Elaborator(text).ring(node)


def build_ring(text: str) -> FiniteRing:
    return elaborate(parse_ring_expr(text), text)


def build_element(R: FiniteRing, text: str) -> int:
    return _Elaborator(text).element(R, parse_element(text))
