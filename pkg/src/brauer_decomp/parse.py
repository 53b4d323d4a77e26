"""Parsers for field elements and symbol expressions.

Element grammar (``^`` binds tightest, unary minus allowed)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' factor) | atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Expression grammar::

    brauer := ['-'] bterm (('+' | '-') bterm)*
    bterm  := [INT '*'] '(' expr ',' expr ')' '_' INT
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fields.base import Field, FieldError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^(),_]))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


@dataclass
class _Tok:
    kind: str
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(_Tok("int", m.group(1), start))
        elif m.group(2):
            out.append(_Tok("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(_Tok("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


def field_names(field: Field) -> dict:
    """Generator names visible in a tower: Kummer generators, the function variable, parameters."""
    names = {}
    node = field
    while node is not None:
        if hasattr(node, "gen") and getattr(node, "name", None):
            names.setdefault(node.name, field(node.gen()))
        if getattr(node, "var", None) and hasattr(node, "gen"):
            names.setdefault(node.var, field(node.gen()))
        if getattr(node, "names", None):
            for n in node.names:
                names.setdefault(n, field(node.var(n)))
        if getattr(node, "kind", "") == "cyclotomic-rational":
            names.setdefault("w", field(node.gen()))
        node = node.parent
    return names


class _Parser:
    def __init__(self, text: str, field: Field, names: dict | None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.field = field
        self.names = field_names(field) if names is None else names

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str | None = None, value: str | None = None) -> _Tok:
        tok = self.peek()
        if (kind and tok.kind != kind) or (value and tok.value != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {tok.value or 'end of input'!r}", self.text, tok.pos)
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value == value

    # elements ----------------------------------------------------------
    def expr(self):
        acc = self.term()
        while self.at("+") or self.at("-"):
            op = self.take().value
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.at("*") or self.at("/"):
            tok = self.take()
            rhs = self.factor()
            if tok.value == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", self.text, tok.pos)
                acc = acc / rhs
        return acc

    def factor(self):
        if self.at("-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.at("^"):
            self.take()
            sign = 1
            if self.at("-"):
                self.take()
                sign = -1
            e = int(self.take("int").value) * sign
            if e < 0 and base.is_zero():
                raise ParseError("negative power of zero", self.text, self.peek().pos)
            base = base**e
        return base

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return self.field(int(tok.value))
        if tok.kind == "name":
            self.take()
            if tok.value not in self.names:
                raise ParseError(f"unknown name {tok.value!r}", self.text, tok.pos)
            return self.names[tok.value]
        if self.at("("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        raise ParseError(f"unexpected {tok.value or 'end of input'!r}", self.text, tok.pos)

    # symbol expressions ------------------------------------------------
    def brauer_terms(self):
        terms = []
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        while True:
            coeff = sign
            if self.peek().kind == "int":
                coeff *= int(self.take().value)
                self.take("op", "*")
            self.take("op", "(")
            a = self.expr()
            self.take("op", ",")
            b = self.expr()
            self.take("op", ")")
            self.take("op", "_")
            n = int(self.take("int").value)
            terms.append((a, b, n, coeff))
            if self.at("+") or self.at("-"):
                sign = 1 if self.take().value == "+" else -1
                continue
            break
        self.take("end")
        return terms


def parse_field_element(field: Field, text: str, names: dict | None = None):
    p = _Parser(text, field, names)
    try:
        v = p.expr()
    except (FieldError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), text, p.peek().pos) from exc
    p.take("end")
    return v


def parse_symbol_terms(field: Field, text: str, names: dict | None = None):
    """List of (a, b, degree, coefficient) from the expression grammar."""
    p = _Parser(text, field, names)
    try:
        return p.brauer_terms()
    except (FieldError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), text, p.peek().pos) from exc
