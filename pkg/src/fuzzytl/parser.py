"""Concrete textual syntax: parsing to formulas and canonical formatting.

Grammar (ASCII only; whitespace insignificant)::

    formula  := or ( "->" formula )?               right-associative
    or       := and ( ("|" | "||") and )*          left-associative
    and      := until ( ("&" | "&&") until )*      left-associative
    until    := unary ( ("U" | "U[t]" | "AU" | "AU[t]") unary )*
    unary    := "!" unary | "X" unary | "X[k]" unary | "S" unary
              | "F" unary | "F[t]" unary | "G" unary | "G[t]" unary
              | "AG" unary | "AG[t]" unary
              | "L[t]" unary | "W[t]" unary | "O[j]" unary
              | "true" | "false" | atom | "(" formula ")"

Atoms are ``[A-Za-z_][A-Za-z0-9_]*`` minus the keywords; ``X[k]`` abbreviates
k nested next operators; bounds are decimal naturals capped at 10**6.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    AlmostAlways,
    AlmostAlwaysB,
    AlmostUntil,
    AlmostUntilB,
    Always,
    AlwaysB,
    And,
    Atom,
    Bot,
    Eventually,
    EventuallyB,
    Formula,
    Implies,
    Lasts,
    Next,
    Not,
    Or,
    Scale,
    Soon,
    Top,
    Until,
    UntilB,
    WeakAnd,
    WeakOr,
    Within,
)
from .errors import ParseError

BOUND_CEILING = 10**6

KEYWORDS = frozenset({"true", "false", "X", "S", "F", "G", "AG", "L", "W", "O", "U", "AU"})

#: Operators whose bracket bound is mandatory.
_NEEDS_BOUND = frozenset({"L", "W", "O"})

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<sym>&&|\|\||->|[!&|()\[\]])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "int", "sym", "eof"
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", (i, i + 1))
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), m.start(), m.end()))
        i = m.end()
    tokens.append(Token("eof", "", len(text), len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, expected: set[str]) -> "ParseError":
        tok = self.peek()
        return ParseError(message, (tok.start, tok.end), frozenset(expected))

    def expect_sym(self, sym: str) -> Token:
        tok = self.peek()
        if tok.kind == "sym" and tok.text == sym:
            return self.advance()
        raise self.fail(f"expected {sym!r}, found {tok.text or 'end of input'!r}", {sym})

    # -- bounds ------------------------------------------------------------

    def bound(self) -> int:
        self.expect_sym("[")
        tok = self.peek()
        if tok.kind != "int":
            raise self.fail(
                f"expected a bound, found {tok.text or 'end of input'!r}", {"<number>"}
            )
        self.advance()
        value = int(tok.text)
        if value > BOUND_CEILING:
            raise ParseError(
                f"bound {value} exceeds the ceiling {BOUND_CEILING}",
                (tok.start, tok.end),
                frozenset({"<number>"}),
            )
        self.expect_sym("]")
        return value

    def optional_bound(self) -> int | None:
        tok = self.peek()
        if tok.kind == "sym" and tok.text == "[":
            return self.bound()
        return None

    # -- grammar -----------------------------------------------------------

    def formula(self) -> Formula:
        left = self.or_level()
        tok = self.peek()
        if tok.kind == "sym" and tok.text == "->":
            self.advance()
            right = self.formula()
            return Implies(left, right)
        return left

    def or_level(self) -> Formula:
        left = self.and_level()
        while True:
            tok = self.peek()
            if tok.kind == "sym" and tok.text == "|":
                self.advance()
                left = Or(left, self.and_level())
            elif tok.kind == "sym" and tok.text == "||":
                self.advance()
                left = WeakOr(left, self.and_level())
            else:
                return left

    def and_level(self) -> Formula:
        left = self.until_level()
        while True:
            tok = self.peek()
            if tok.kind == "sym" and tok.text == "&":
                self.advance()
                left = And(left, self.until_level())
            elif tok.kind == "sym" and tok.text == "&&":
                self.advance()
                left = WeakAnd(left, self.until_level())
            else:
                return left

    def until_level(self) -> Formula:
        left = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "name" and tok.text in ("U", "AU"):
                self.advance()
                t = self.optional_bound()
                right = self.unary()
                if tok.text == "U":
                    left = Until(left, right) if t is None else UntilB(t, left, right)
                else:
                    left = AlmostUntil(left, right) if t is None else AlmostUntilB(t, left, right)
            else:
                return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "sym":
            if tok.text == "!":
                self.advance()
                return Not(self.unary())
            if tok.text == "(":
                self.advance()
                inner = self.formula()
                self.expect_sym(")")
                return inner
        elif tok.kind == "name":
            text = tok.text
            if text == "true":
                self.advance()
                return Top()
            if text == "false":
                self.advance()
                return Bot()
            if text == "X":
                self.advance()
                k = self.optional_bound()
                inner = self.unary()
                for _ in range(1 if k is None else k):
                    inner = Next(inner)
                return inner
            if text == "S":
                self.advance()
                return Soon(self.unary())
            if text == "F":
                self.advance()
                t = self.optional_bound()
                inner = self.unary()
                return Eventually(inner) if t is None else EventuallyB(t, inner)
            if text == "G":
                self.advance()
                t = self.optional_bound()
                inner = self.unary()
                return Always(inner) if t is None else AlwaysB(t, inner)
            if text == "AG":
                self.advance()
                t = self.optional_bound()
                inner = self.unary()
                return AlmostAlways(inner) if t is None else AlmostAlwaysB(t, inner)
            if text in _NEEDS_BOUND:
                self.advance()
                t = self.bound()
                inner = self.unary()
                if text == "L":
                    return Lasts(t, inner)
                if text == "W":
                    return Within(t, inner)
                return Scale(t, inner)
            if text not in KEYWORDS:
                self.advance()
                return Atom(text)
        raise self.fail(
            f"expected a formula, found {tok.text or 'end of input'!r}",
            {"atom", "true", "false", "!", "(", "X", "S", "F", "G", "AG", "L[", "W[", "O["},
        )


def parse(text: str) -> Formula:
    """Parse concrete syntax into a formula tree."""
    p = _Parser(text)
    f = p.formula()
    tok = p.peek()
    if tok.kind != "eof":
        raise p.fail(f"trailing input {tok.text!r}", {"end of input"})
    return f


# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------

_IMPLIES, _OR, _AND, _UNTIL, _UNARY, _LEAF = range(6)


def _join_unary(head: str, child: str) -> str:
    if child and child[0] in "(!":
        return head + child
    return head + " " + child


def _render(f: Formula) -> tuple[str, int]:
    if isinstance(f, Atom):
        return f.name, _LEAF
    if isinstance(f, Top):
        return "true", _LEAF
    if isinstance(f, Bot):
        return "false", _LEAF
    if isinstance(f, Not):
        return "!" + _fmt(f.arg, _UNARY), _UNARY
    if isinstance(f, Next):
        k = 0
        inner: Formula = f
        while isinstance(inner, Next):
            k += 1
            inner = inner.arg
        head = "X" if k == 1 else f"X[{k}]"
        return _join_unary(head, _fmt(inner, _UNARY)), _UNARY
    if isinstance(f, Soon):
        return _join_unary("S", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, Eventually):
        return _join_unary("F", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, EventuallyB):
        return _join_unary(f"F[{f.bound}]", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, Always):
        return _join_unary("G", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, AlwaysB):
        return _join_unary(f"G[{f.bound}]", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, AlmostAlways):
        return _join_unary("AG", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, AlmostAlwaysB):
        return _join_unary(f"AG[{f.bound}]", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, Lasts):
        return _join_unary(f"L[{f.bound}]", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, Within):
        return _join_unary(f"W[{f.bound}]", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, Scale):
        return _join_unary(f"O[{f.index}]", _fmt(f.arg, _UNARY)), _UNARY
    if isinstance(f, Until):
        return f"{_fmt(f.left, _UNTIL)} U {_fmt(f.right, _UNTIL + 1)}", _UNTIL
    if isinstance(f, UntilB):
        return f"{_fmt(f.left, _UNTIL)} U[{f.bound}] {_fmt(f.right, _UNTIL + 1)}", _UNTIL
    if isinstance(f, AlmostUntil):
        return f"{_fmt(f.left, _UNTIL)} AU {_fmt(f.right, _UNTIL + 1)}", _UNTIL
    if isinstance(f, AlmostUntilB):
        return f"{_fmt(f.left, _UNTIL)} AU[{f.bound}] {_fmt(f.right, _UNTIL + 1)}", _UNTIL
    if isinstance(f, And):
        return f"{_fmt(f.left, _AND)} & {_fmt(f.right, _AND + 1)}", _AND
    if isinstance(f, WeakAnd):
        return f"{_fmt(f.left, _AND)} && {_fmt(f.right, _AND + 1)}", _AND
    if isinstance(f, Or):
        return f"{_fmt(f.left, _OR)} | {_fmt(f.right, _OR + 1)}", _OR
    if isinstance(f, WeakOr):
        return f"{_fmt(f.left, _OR)} || {_fmt(f.right, _OR + 1)}", _OR
    if isinstance(f, Implies):
        return f"{_fmt(f.left, _IMPLIES + 1)} -> {_fmt(f.right, _IMPLIES)}", _IMPLIES
    raise TypeError(f"unknown formula node {f!r}")


def _fmt(f: Formula, min_level: int) -> str:
    text, level = _render(f)
    if level < min_level:
        return "(" + text + ")"
    return text


def format_formula(f: Formula) -> str:
    """Canonical text with minimal parentheses; parse(format_formula(f)) == f."""
    return _fmt(f, _IMPLIES)
