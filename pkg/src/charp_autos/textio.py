"""Parsing and canonical printing of the text formats.

Polynomial grammar (accepted input is free-form, printing is canonical):

    poly   := ["-"] term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := atom ["^" ["-"] int]
    atom   := int | name | "(" poly ")"

"u" names the coefficient parameter; division and negative powers are only
defined for coefficients and unit monomials of invertible variables.
Canonical printing orders terms by graded lex, descending, and writes every
coefficient outside the prime field in parentheses: "(u^2+u)*x1^2*x2 + 1".
"""

import re

from .coeffs import Coeff
from .errors import ParseError
from .poly import VarTable

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\^|\*|\+|-|/|\(|\)|,|=|\[|\]|:))")


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), pos))
        else:
            tokens.append(("op", m.group(3), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, table, tokens):
        self.table = table
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, -1)

    def take(self):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError("expected %r, got %r" % (op, val), pos)

    def parse_poly(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        out = self.parse_term()
        if negate:
            out = -out
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.parse_term()
                out = out - rhs if val == "-" else out + rhs
            else:
                return out

    def parse_term(self):
        out = self.parse_factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.parse_factor()
                if val == "*":
                    out = out * rhs
                else:
                    out = out * _invert(rhs, pos)
            else:
                return out

    def parse_factor(self):
        base = self.parse_atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, pos = self.peek()
            if kind == "op" and val == "-":
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected integer exponent", pos)
            e = sign * val
            if e < 0:
                return _invert(base, pos) ** (-e)
            return base ** e
        return base

    def parse_atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.table.const(val)
        if kind == "name":
            if val == "u":
                return self.table.const(Coeff.u(self.table.p))
            if val not in self.table.index:
                raise ParseError("unknown variable %r" % val, pos)
            return self.table.var(val)
        if kind == "op" and val == "(":
            inner = self.parse_poly()
            self.expect(")")
            return inner
        raise ParseError("unexpected token %r" % (val,), pos)


def _invert(f, pos):
    if f.is_constant():
        c = f.constant_term()
        if c.is_zero():
            raise ParseError("division by zero", pos)
        return f.table.const(c.inv())
    try:
        return f.monomial_inverse()
    except Exception:
        raise ParseError("cannot invert a non-unit polynomial", pos)


def parse_poly(table, text):
    parser = _Parser(table, tokenize(text))
    out = parser.parse_poly()
    if parser.i != len(parser.tokens):
        raise ParseError("trailing input", parser.tokens[parser.i][2])
    return out


def parse_coeff(p, text):
    table = VarTable(p, ())
    f = parse_poly(table, text)
    if not f.is_constant():
        raise ParseError("expected a coefficient, got %s" % f)
    return f.constant_term()


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def coeff_to_str(c):
    return str(c)


def _coeff_atom(c):
    if c.is_constant():
        return str(c.const_value())
    return "(%s)" % c


def poly_to_str(f):
    if not f.terms:
        return "0"
    table = f.table
    parts = []
    for exp, c in f.sorted_terms():
        mono = "*".join(
            name if e == 1 else "%s^%d" % (name, e)
            for name, e in zip(table.all_names, exp) if e)
        if not mono:
            parts.append(_coeff_atom(c))
        elif c.is_one():
            parts.append(mono)
        else:
            parts.append("%s*%s" % (_coeff_atom(c), mono))
    return " + ".join(parts)


def map_to_str(pmap):
    return "(%s)" % ", ".join(poly_to_str(g) for g in pmap.images)


def _parse_image_list(table, text):
    tokens = tokenize(text)
    if not tokens or tokens[0][:2] != ("op", "("):
        raise ParseError("a map starts with '('", tokens[0][2] if tokens else 0)
    parser = _Parser(table, tokens)
    parser.expect("(")
    images = [parser.parse_poly()]
    while True:
        kind, val, pos = parser.take()
        if kind == "op" and val == ",":
            images.append(parser.parse_poly())
        elif kind == "op" and val == ")":
            break
        else:
            raise ParseError("expected ',' or ')'", pos)
    if parser.i != len(parser.tokens):
        raise ParseError("trailing input", parser.tokens[parser.i][2])
    if len(images) != table.nvars:
        raise ParseError("expected %d images, got %d" % (table.nvars, len(images)))
    return images


def parse_map(table, text):
    from .endo import PolyMap
    return PolyMap(table, _parse_image_list(table, text))


def action_to_str(action):
    return "(%s)" % ", ".join(poly_to_str(g) for g in action.images)


def parse_action(table, text, base="field"):
    from .gaction import GaAction
    return GaAction(table, _parse_image_list(table, text), base=base)


def word_to_str(word):
    return word.to_text()


_WORD_BLOCK = re.compile(r"\[\s*(aff|tri|E1|E2|H0|id)\s*(?::([^\]]*))?\]")


def parse_word(table, text, t=1):
    """Rebuild a serialized word: centralizer words from E1/E2/H0 blocks,
    tame words from aff/tri blocks."""
    from .plane import AffineFactor, CentralizerWord, TameWord, TriangularFactor
    blocks = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _WORD_BLOCK.match(stripped, pos)
        if not m:
            raise ParseError("expected a [tag: ...] block", pos)
        blocks.append((m.group(1), (m.group(2) or "").strip()))
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    tags = {tag for tag, _ in blocks}
    if tags <= {"E1", "E2", "H0"}:
        gens = []
        h0 = (1, 0, 0)
        x1, x2 = table.names
        for tag, payload in blocks:
            if tag == "H0":
                fields = dict(part.split("=", 1)
                              for part in payload.split(",") if part)
                h0 = tuple(parse_coeff(table.p, fields.get(k, "0"))
                           for k in ("a", "u1", "u2"))
            else:
                g = parse_poly(table, payload)
                if tag == "E1":
                    g = g.substitute({x2: table.var(x1)})
                gens.append((tag, g))
        return CentralizerWord(table, t, gens, h0)
    factors = []
    for tag, payload in blocks:
        if tag == "id":
            continue
        if tag == "aff":
            vals = [parse_coeff(table.p, part) for part in payload.split(",")]
            if len(vals) != 6:
                raise ParseError("affine factor needs 6 entries")
            factors.append(AffineFactor(table, vals[:4], vals[4:]))
        elif tag == "tri":
            fields = dict(part.split("=", 1) for part in payload.split(",", 3))
            factors.append(TriangularFactor(
                table, parse_coeff(table.p, fields["a"]),
                parse_coeff(table.p, fields["b"]),
                parse_coeff(table.p, fields["c"]),
                parse_poly(table, fields["q"])))
        else:
            raise ParseError("cannot mix word kinds in %r" % text)
    return TameWord(table, factors)


def report_to_str(entries):
    """Serialize an ordered dict of named booleans/values JSON-like."""
    body = ", ".join('"%s": %s' % (k, _report_value(v)) for k, v in entries)
    return "{%s}" % body


def _report_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (int, float)):
        return str(v)
    return '"%s"' % v
