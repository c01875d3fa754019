"""Parsers for dimension vectors and polynomial factors.

Factor grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 't' INT | '(' expr ')'

Division is only allowed by nonzero constants, so ``1/2*t1`` is fine but
``t1/t2`` is not; negative powers are allowed on monomials.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .genfun import DimVec
from .laurent import LaurentPoly


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at offset {position}")
        self.position = position
        self.text = text


def parse_dimvec(s: str) -> DimVec:
    if not s.strip():
        raise ParseError("empty dimension vector", 0, s)
    out = []
    pos = 0
    for tok in s.split(","):
        stripped = tok.strip()
        start = pos + (len(tok) - len(tok.lstrip()))
        if not stripped:
            raise ParseError("missing entry", start, s)
        if stripped.startswith("-") and stripped[1:].isdigit():
            raise ParseError(f"negative entry {stripped}", start, s)
        if not stripped.isdigit():
            raise ParseError(f"not a non-negative integer: {stripped!r}", start, s)
        out.append(int(stripped))
        pos += len(tok) + 1
    if sum(out) == 0:
        raise ParseError("dimension vector has total dimension 0", 0, s)
    return tuple(out)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>t\d+)|(?P<op>[-+*/^()]))")


def _tokenize(s: str):
    pos = 0
    out = []
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN.match(s, pos)
        if not m:
            bad = pos + len(s[pos:]) - len(s[pos:].lstrip())
            raise ParseError(f"unexpected character {s[bad]!r}", bad, s)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(s)))
    return out


class _Parser:
    def __init__(self, s: str, nvars: int):
        self.s = s
        self.nvars = nvars
        self.toks = _tokenize(s)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}", pos, self.s)

    def expr(self) -> LaurentPoly:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> LaurentPoly:
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            op, pos = self.take()[1:]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.constant_value() == 0:
                    raise ParseError("division only by nonzero constants", pos, self.s)
                p = p * (1 / Fraction(q.constant_value()))
        return p

    def unary(self) -> LaurentPoly:
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self) -> LaurentPoly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError("expected integer exponent", pos, self.s)
            n = -int(v) if neg else int(v)
            if n < 0 and len(base) != 1:
                raise ParseError("negative power of a non-monomial", pos, self.s)
            return base ** n
        return base

    def atom(self) -> LaurentPoly:
        kind, v, pos = self.take()
        if kind == "int":
            return LaurentPoly.const(self.nvars, int(v))
        if kind == "var":
            idx = int(v[1:])
            if not 1 <= idx <= self.nvars:
                raise ParseError(f"unknown variable {v} (have t1..t{self.nvars})", pos, self.s)
            return LaurentPoly.var(self.nvars, idx)
        if v == "(":
            p = self.expr()
            self.expect(")")
            return p
        what = "end of input" if kind == "end" else repr(v)
        raise ParseError(f"unexpected {what}", pos, self.s)


def parse_poly(s: str, nvars: int) -> LaurentPoly:
    """Parse an expression into a :class:`LaurentPoly` without a homogeneity check."""
    if not s.strip():
        raise ParseError("empty expression", 0, s)
    p = _Parser(s, nvars)
    out = p.expr()
    kind, v, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {v!r}", pos, s)
    return out


def parse_factor(s: str, nvars: int, check_homogeneous: bool = True) -> LaurentPoly:
    p = parse_poly(s, nvars)
    if check_homogeneous and not p.is_homogeneous():
        raise ValueError(f"factor {s!r} is not homogeneous (degrees {sorted(p.degrees())})")
    return p


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {s!r}", 0, s) from exc
