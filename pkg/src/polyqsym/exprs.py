"""Text grammar for polytope expressions and integer combinations.

    sum    := ['-'] term (('+'|'-') term)*
    term   := [INT '*'] factor
    factor := 'C' factor | 'B' factor | 'dual' '(' sum ')'
            | 'prod' '(' sum ',' sum ')' | 'join' '(' sum ',' sum ')'
            | atom | '(' sum ')'
    atom   := 'empty' | 'pt' | 'cell24' | NAME '(' INT ')' | 'word' '(' WORD ')'

Unary cone/bipyramid/dual bind tighter than '*'; '+'/'-' bind last.
"""

from __future__ import annotations

import re

from . import polytopes as pb
from .ring import (FormalSum, JOIN_RING, PRODUCT_RING, bipyramid_op, cone_op,
                   dual_sum, mul_join, mul_product)


class ExprError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s at offset %d" % (message, position))
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)"
                    r"|(?P<sym>[()+,*-]))")


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprError("unexpected character %r" % stripped[0],
                            len(text) - len(stripped))
        if m.lastgroup == "int":
            out.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name"), m.start("name")))
        else:
            out.append(("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, value, position = self.take()
        if kind != "sym" or value != sym:
            raise ExprError("expected %r" % sym, position)

    def parse_sum(self):
        kind, value, _ = self.peek()
        if kind == "sym" and value == "-":
            self.take()
            total = -1 * self.parse_term()
        else:
            total = self.parse_term()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.take()
                term = self.parse_term()
                total = total + term if value == "+" else total - term
            else:
                return total

    def parse_term(self):
        kind, value, _ = self.peek()
        coeff = 1
        if kind == "int":
            self.take()
            coeff = value
            self.expect_sym("*")
        return coeff * self.parse_factor()

    def parse_factor(self):
        kind, value, position = self.peek()
        if kind == "sym" and value == "(":
            self.take()
            inner = self.parse_sum()
            self.expect_sym(")")
            return inner
        if kind != "name":
            raise ExprError("expected an expression", position)
        self.take()
        if value == "C":
            return cone_op(self.parse_factor())
        if value == "B":
            return bipyramid_op(self.parse_factor())
        if value == "dual":
            self.expect_sym("(")
            inner = self.parse_sum()
            self.expect_sym(")")
            return dual_sum(inner)
        if value in ("prod", "join"):
            self.expect_sym("(")
            left = self.parse_sum()
            self.expect_sym(",")
            right = self.parse_sum()
            self.expect_sym(")")
            if value == "prod":
                prod = mul_product(_as_product_ring(left, position),
                                   _as_product_ring(right, position))
                return FormalSum(JOIN_RING, prod.terms)
            return mul_join(left, right)
        return self.parse_atom(value, position)

    def parse_atom(self, name, position):
        if name == "empty":
            return FormalSum.of(pb.empty(), JOIN_RING)
        if name == "pt":
            return FormalSum.of(pb.point(), JOIN_RING)
        if name == "cell24":
            return FormalSum.of(pb.cell24(), JOIN_RING)
        if name == "word":
            self.expect_sym("(")
            kind, letters, wpos = self.take()
            if kind != "name" or any(ch not in "BC" for ch in letters):
                raise ExprError("word(..) takes letters B and C", wpos)
            self.expect_sym(")")
            return FormalSum.of(pb.from_word(letters), JOIN_RING)
        if name in ("simplex", "cube", "cross", "polygon"):
            self.expect_sym("(")
            kind, n, npos = self.take()
            if kind != "int":
                raise ExprError("%s(..) takes an integer" % name, npos)
            self.expect_sym(")")
            try:
                return FormalSum.of(pb.build_named(name, n), JOIN_RING)
            except ValueError as exc:
                raise ExprError(str(exc), npos) from None
        raise ExprError("unknown atom %r" % name, position)


def _as_product_ring(s, position):
    try:
        return FormalSum(PRODUCT_RING, s.terms)
    except ValueError:
        raise ExprError("the empty polytope cannot enter prod(..)",
                        position) from None


def parse_expression(text, ambient=None):
    """Parse to a FormalSum.  The ambient defaults to the product ring
    unless the result mentions the empty polytope."""
    parser = _Parser(text)
    result = parser.parse_sum()
    kind, _, position = parser.peek()
    if kind != "end":
        raise ExprError("trailing input", position)
    if ambient is None:
        ambient = JOIN_RING if any(p.is_empty() for p in result.terms) \
            else PRODUCT_RING
    return FormalSum(ambient, result.terms)


def format_sum(s):
    """Grammar text for a FormalSum whose terms carry registry names."""
    if not s.terms:
        return "0"
    order = sorted(s.terms.items(),
                   key=lambda pc: (pc[0].dim, pc[0].name or "", pc[0].key))
    parts = []
    for poly, coeff in order:
        name = poly.name
        if name is None:
            raise ValueError("term without a registered name cannot be "
                             "printed in grammar form")
        body = name if abs(coeff) == 1 else "%d*%s" % (abs(coeff), name)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append((" + " if coeff > 0 else " - ") + body)
    return "".join(parts)
