"""Polynomial expression parser and printer.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)*
    atom   := INT | VAR | '(' expr ')'
"""

from __future__ import annotations

import re
from typing import List, Sequence

from .field import symmetric
from .poly import Poly, poly_add, poly_mul, poly_pow, poly_scale, unit_exps

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__("%s at position %d in %r" % (msg, pos, text))
        self.pos = pos
        self.text = text


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch.strip():
                out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], p: int):
        self.text = text
        self.vars = {v: i for i, v in enumerate(variables)}
        self.n = len(variables)
        self.p = p
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        out = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token %r" % (self.peek()[1],))
        return out

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        out = poly_scale(self.term(), sign, self.p)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            s = -1 if self.take()[1] == "-" else 1
            out = poly_add(out, poly_scale(self.term(), s, self.p), self.p)
        return out

    def term(self) -> Poly:
        out = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            out = poly_mul(out, self.factor(), self.p)
        return out

    def factor(self) -> Poly:
        base = self.atom()
        while self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a non-negative integer", tok)
            base = poly_pow(base, tok[1], self.p, self.n)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            c = val % self.p
            return {unit_exps(self.n): c} if c else {}
        if kind == "var":
            if val not in self.vars:
                self.error("undeclared variable %r" % val, tok)
            e = [0] * self.n
            e[self.vars[val]] = 1
            return {tuple(e): 1}
        if kind == "op" and val == "(":
            out = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return out
        if kind == "op" and val == "-":
            return poly_scale(self.atom(), -1, self.p)
        self.error("unexpected token %r" % (val,), tok)


def parse_poly(text: str, variables: Sequence[str], p: int) -> Poly:
    return _Parser(text, variables, p).parse()


def format_poly(f: Poly, variables: Sequence[str], p: int, order=None) -> str:
    """Print a polynomial in the input grammar (coefficients symmetric mod p)."""
    if not f:
        return "0"
    terms = order.sorted_terms({(0, e): c for e, c in f.items()}) if order else \
        sorted(((0, e) for e in f), reverse=True)
    parts: List[str] = []
    for _, e in terms:
        c = symmetric(f[e], p)
        mono = "*".join(v if a == 1 else "%s^%d" % (v, a) for v, a in zip(variables, e) if a)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = "%d*%s" % (abs(c), mono)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
