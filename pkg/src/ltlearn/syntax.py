"""Text syntax for formulas.

Grammar (whitespace is insignificant)::

    formula := "true" | "false" | IDENT | "!" IDENT
             | ("X" | "F" | "G") formula
             | "(" formula ("&" | "|" | "U") formula ")"

IDENT is ``[A-Za-z0-9_]+`` minus the reserved words.  As a convenience the
parser also accepts ``(φ)`` and flat chains such as ``(a & b & c)``, read
left-nested; ``format_formula`` never produces either.
"""
from __future__ import annotations

import re

from .formula import (
    And, Bottom, Eventually, Formula, Globally, Letter, NegLetter, Next, Or,
    Top, Until, FALSE, TRUE,
)

__all__ = ["parse", "format_formula", "FormulaSyntaxError", "RESERVED", "check_letter"]

RESERVED = frozenset({"true", "false", "X", "F", "G", "U"})

_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_]+)|([()&|!∧∨¬]))")
_BINOPS = {"&": And, "∧": And, "|": Or, "∨": Or, "U": Until}
_UNARY = {"X": Next, "F": Eventually, "G": Globally}


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def check_letter(name: str) -> str:
    if not re.fullmatch(r"[A-Za-z0-9_]+", name):
        raise ValueError(f"letter {name!r} is not a valid identifier")
    if name in RESERVED:
        raise ValueError(f"letter {name!r} collides with a reserved word")
    return name


def _tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group(1) or m.group(2)
        out.append((tok, m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, want: str):
        tok, pos = self.take()
        if tok != want:
            shown = "end of input" if tok is None else repr(tok)
            raise FormulaSyntaxError(f"expected {want!r}, found {shown}", pos)

    def formula(self) -> Formula:
        tok, pos = self.take()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", pos)
        if tok == "true":
            return TRUE
        if tok == "false":
            return FALSE
        if tok in _UNARY:
            return _UNARY[tok](self.formula())
        if tok in ("!", "¬"):
            name, npos = self.take()
            if name is None or not re.fullmatch(r"[A-Za-z0-9_]+", name):
                raise FormulaSyntaxError("negation applies to letters only", npos)
            if name in RESERVED:
                raise FormulaSyntaxError(f"reserved word {name!r} used as a letter", npos)
            return NegLetter(name)
        if tok == "(":
            left = self.formula()
            op, opos = self.peek()
            if op == ")":
                self.take()
                return left
            if op not in _BINOPS:
                shown = "end of input" if op is None else repr(op)
                raise FormulaSyntaxError(f"expected a binary operator, found {shown}", opos)
            self.take()
            node = _BINOPS[op](left, self.formula())
            while True:
                nxt, npos = self.peek()
                if nxt == ")":
                    self.take()
                    return node
                if nxt in _BINOPS and _BINOPS[nxt] is _BINOPS[op] and op != "U":
                    self.take()
                    node = _BINOPS[op](node, self.formula())
                    continue
                shown = "end of input" if nxt is None else repr(nxt)
                raise FormulaSyntaxError(f"expected ')', found {shown}", npos)
        if tok in ("U",):
            raise FormulaSyntaxError("'U' is a binary operator and needs parentheses", pos)
        if re.fullmatch(r"[A-Za-z0-9_]+", tok):
            return Letter(tok)
        raise FormulaSyntaxError(f"unexpected token {tok!r}", pos)


def parse(text: str) -> Formula:
    p = _Parser(text)
    phi = p.formula()
    tok, pos = p.peek()
    if tok is not None:
        raise FormulaSyntaxError(f"trailing input {tok!r}", pos)
    return phi


def format_formula(phi: Formula) -> str:
    parts: list[str] = []
    # explicit stack: formulas from the fixed-alphabet generators nest deeply
    stack: list = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, str):
            parts.append(node)
            continue
        t = type(node)
        if t is Top:
            parts.append("true")
        elif t is Bottom:
            parts.append("false")
        elif t is Letter:
            parts.append(node.name)
        elif t is NegLetter:
            parts.append("!" + node.name)
        elif t in (Next, Eventually, Globally):
            parts.append({Next: "X ", Eventually: "F ", Globally: "G "}[t])
            stack.append(node.child)
        else:
            sym = {And: " & ", Or: " | ", Until: " U "}[t]
            stack.extend([")", node.right, sym, node.left])
            parts.append("(")
    return "".join(parts)
