"""A small text format for groups, cones and stacks.

    dim 2
    group g { gen 1 0 ; gen 0 1/2 }
    cone  c { gen 1 0 ; gen 1 1 }
    stack s { level 1 sqrt2 ; level 1 0 }

Tokens are ``{``, ``}``, ``;`` and maximal runs of other non-blank
characters, so a formal real such as ``1+2*sqrt2`` must not contain spaces.
``#`` starts a comment running to the end of the line.  The ``;`` before a
closing brace is optional.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cones import ConeSpec
from .errors import InputError, ParseError
from .exact import QVec
from .formal import format_formal, parse_formal
from .groups import GroupPresentation
from .stacks import OrderStack

KINDS = ("group", "cone", "stack")


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def tokenize(text: str) -> list:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        i = 0
        while i < len(line):
            ch = line[i]
            if ch.isspace():
                i += 1
            elif ch in "{};":
                tokens.append(Token(ch, lineno, i + 1))
                i += 1
            else:
                j = i
                while j < len(line) and not line[j].isspace() and line[j] not in "{};":
                    j += 1
                tokens.append(Token(line[i:j], lineno, i + 1))
                i = j
    return tokens


@dataclass
class SpecFile:
    dim: int
    groups: dict = field(default_factory=dict)
    cones: dict = field(default_factory=dict)
    stacks: dict = field(default_factory=dict)

    def names(self) -> list:
        return [*self.groups, *self.cones, *self.stacks]

    def _pick(self, table: dict, kind: str, name):
        if name is None:
            if len(table) == 1:
                return next(iter(table.values()))
            if not table and kind == "group":
                return GroupPresentation.integer_lattice(self.dim)
            raise InputError(f"file defines {len(table)} {kind}s; name one explicitly")
        if name not in table:
            raise InputError(f"unknown {kind} {name!r}")
        return table[name]

    def group(self, name=None) -> GroupPresentation:
        """Named group; with no name, the only group, or Z^n if there is none."""
        return self._pick(self.groups, "group", name)

    def cone(self, name=None) -> ConeSpec:
        return self._pick(self.cones, "cone", name)

    def stack(self, name=None) -> OrderStack:
        return self._pick(self.stacks, "stack", name)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.last = Token("", 1, 1)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, what: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input, expected {what}", self.last.line, self.last.column)
        self.pos += 1
        self.last = tok
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next(repr(text))
        if tok.text != text:
            raise _error(f"expected {text!r}", tok)
        return tok

    def integer(self, what: str) -> int:
        tok = self.next(what)
        try:
            return int(tok.text)
        except ValueError:
            raise _error(f"expected {what}", tok) from None


def _error(message: str, tok: Token) -> ParseError:
    return ParseError(message, tok.line, tok.column, tok.text)


def _rational(tok: Token) -> Fraction:
    text = tok.text
    num, _, den = text.partition("/")
    try:
        if "/" in text and not den.isdigit():
            raise ValueError
        int(num)
        return Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise _error("expected a rational p or p/q", tok) from None


def _formal(tok: Token):
    try:
        return parse_formal(tok.text)
    except ParseError as exc:
        col = tok.column + (exc.column - 1 if exc.column else 0)
        raise ParseError(exc.message, tok.line, col, tok.text) from None


def _body(p: _Parser, keyword: str, dim: int, read) -> list:
    p.expect("{")
    rows = []
    while True:
        tok = p.next(f"{keyword!r} or '}}'")
        if tok.text == "}":
            return rows
        if tok.text != keyword:
            raise _error(f"expected {keyword!r} or '}}'", tok)
        entries = []
        while p.peek() is not None and p.peek().text not in (";", "}"):
            entries.append(read(p.next("entry")))
        if len(entries) != dim:
            raise _error(f"expected {dim} coordinates, got {len(entries)}", tok)
        rows.append((tok, entries))
        if p.peek() is not None and p.peek().text == ";":
            p.next("';'")


def parse_spec(text: str) -> SpecFile:
    """Parse a whole file; any error raises :class:`ParseError` and nothing is returned."""
    p = _Parser(text)
    p.expect("dim")
    dim_tok = p.peek()
    dim = p.integer("dimension")
    if dim < 1:
        raise _error("dimension must be at least 1", dim_tok)
    spec = SpecFile(dim)
    while p.peek() is not None:
        kw = p.next("definition")
        if kw.text not in KINDS:
            raise _error("expected 'group', 'cone' or 'stack'", kw)
        name = p.next("name")
        if name.text in "{};" or name.text in KINDS:
            raise _error("expected a name", name)
        if name.text in spec.names():
            raise _error(f"duplicate name {name.text!r}", name)
        if kw.text == "stack":
            rows = _body(p, "level", dim, _formal)
        else:
            rows = _body(p, "gen", dim, _rational)
        if not rows and kw.text != "cone":
            raise _error(f"{kw.text} {name.text!r} has no entries", name)
        vecs = [tuple(r) for _, r in rows]
        try:
            if kw.text == "group":
                spec.groups[name.text] = GroupPresentation(dim, vecs)
            elif kw.text == "cone":
                spec.cones[name.text] = ConeSpec(dim, vecs)
            else:
                spec.stacks[name.text] = OrderStack(vecs, dim)
        except InputError as exc:
            raise _error(str(exc), name) from None
    return spec


# -- printing ------------------------------------------------------------------


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_vector(v: Sequence) -> str:
    return " ".join(format_rational(a) for a in v)


def _block(keyword: str, kind: str, name: str, rows: list) -> str:
    inner = " ".join(f"{keyword} {r} ;" for r in rows)
    return f"{kind} {name} {{ {inner} }}" if rows else f"{kind} {name} {{ }}"


def format_group(name: str, G: GroupPresentation) -> str:
    return _block("gen", "group", name, [format_vector(g) for g in G.generators])


def format_cone(name: str, C: ConeSpec) -> str:
    return _block("gen", "cone", name, [format_vector(g) for g in C.generators])


def format_stack(name: str, S: OrderStack) -> str:
    return _block("level", "stack", name, [" ".join(format_formal(e) for e in f) for f in S.levels])


def format_spec(spec: SpecFile) -> str:
    lines = [f"dim {spec.dim}"]
    lines += [format_group(k, v) for k, v in spec.groups.items()]
    lines += [format_cone(k, v) for k, v in spec.cones.items()]
    lines += [format_stack(k, v) for k, v in spec.stacks.items()]
    return "\n".join(lines) + "\n"


def parse_point(text: str, dim: int) -> QVec:
    """Whitespace- or comma-separated rationals."""
    parts = text.replace(",", " ").split()
    if len(parts) != dim:
        raise InputError(f"expected {dim} coordinates, got {len(parts)} in {text!r}")
    out = []
    for part in parts:
        try:
            out.append(_rational(Token(part, 1, 1)))
        except ParseError:
            raise InputError(f"malformed coordinate {part!r} in {text!r}") from None
    return tuple(out)
