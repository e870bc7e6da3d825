"""Text syntax for elements, matrices, generator words and presentations.

Element grammar (all contexts)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff ['*' product] | product
    coeff  := INT ['/' INT]
    product:= atom ('*' atom)*

Atoms are ``i1, i2, ...`` for gamma:n, ``w`` (second basis element) for
quadratic orders and ``i, j, k`` for quaternion orders.
"""

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            if not m.group(3).isspace():
                tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _ElementParser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        total = self.ctx.zero()
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        total = total + self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "end":
                return total
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                s = -1 if tok[1] == "-" else 1
                total = total + self.term() * s
            else:
                self.fail(f"unexpected {tok[1]!r}")

    def term(self):
        tok = self.peek()
        coeff = None
        if tok[0] == "int":
            coeff = self.rational()
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "*":
                self.take()
                return self.product() * coeff
            if nxt[0] == "name":
                return self.product() * coeff
            return self.ctx.scalar(coeff)
        if tok[0] == "name":
            return self.product()
        self.fail(f"expected a coefficient or generator, found {tok[1]!r}" if tok[1] else "unexpected end of input")

    def rational(self):
        tok = self.take()
        num = int(tok[1])
        nxt = self.peek()
        if nxt[0] == "op" and nxt[1] == "/":
            self.take()
            den_tok = self.peek()
            if den_tok[0] != "int":
                self.fail("expected a denominator")
            self.take()
            den = int(den_tok[1])
            if den == 0:
                self.fail("zero denominator", den_tok)
            return Fraction(num, den)
        return num

    def product(self):
        out = self.atom()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                out = out * self.atom()
            else:
                return out

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            # allow "i1*2" style trailing coefficients
            self.i -= 1
            return self.ctx.scalar(self.rational())
        if tok[0] != "name":
            self.fail(f"expected a generator, found {tok[1]!r}" if tok[1] else "unexpected end of input", tok)
        value = _generator(self.ctx, tok[1])
        if value is None:
            self.fail(f"unknown generator {tok[1]!r} in {self.ctx.name}", tok)
        return value


def _generator(ctx, name):
    kind = getattr(ctx, "kind", None)
    if kind == "clifford":
        m = re.fullmatch(r"i(\d+)", name)
        if m and 1 <= int(m.group(1)) <= ctx.n - 1:
            from .clifford import CliffordElement

            return CliffordElement.generator(ctx.n, int(m.group(1)))
        return None
    if kind == "quadratic":
        if name == "w":
            return ctx.element(ctx.basis[1])
        return None
    if kind == "quaternion":
        idx = {"i": 1, "j": 2, "k": 3}.get(name)
        if idx is None:
            return None
        amb = [0, 0, 0, 0]
        amb[idx] = 1
        return ctx.element(amb)
    return None


def parse_element(text, ctx):
    """Parse ``text`` as an element of ``ctx``; raises ParseError with offset."""
    if not isinstance(text, str):
        raise ParseError("element must be given as text", 0, str(text))
    return _ElementParser(text, ctx).parse()


def _join(terms):
    if not terms:
        return "0"
    parts = []
    for coeff, name in terms:
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if name:
            body = name if mag == 1 else f"{Fraction(mag)}*{name}"
        else:
            body = str(Fraction(mag))
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def format_ring_element(x):
    ctx = x.ctx
    if ctx.kind == "Z":
        return str(Fraction(x.amb[0]))
    if ctx.kind == "quadratic":
        a, b = x.coords
        return _join([(c, n) for c, n in ((a, ""), (b, "w")) if c])
    names = ("", "i", "j", "k")
    return _join([(c, n) for c, n in zip(x.amb, names) if c])


def format_element(x):
    return str(x)


# words and presentations ---------------------------------------------------

_WORD_TOKEN = re.compile(r"\s*(Einv|E|Diag|D)\s*\(")


def _split_args(text, start):
    """Return (args, end) for the parenthesised argument list opening before ``start``."""
    depth = 1
    args = []
    cur = start
    i = start
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                args.append((text[cur:i], cur))
                return args, i + 1
        elif ch == "," and depth == 1:
            args.append((text[cur:i], cur))
            cur = i + 1
        i += 1
    raise ParseError("unclosed parenthesis", start, text)


def parse_word_tokens(text):
    """Split a word like ``E(i1) Einv(0) D(i2)`` into (kind, [arg texts with offsets])."""
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return out
        m = _WORD_TOKEN.match(text, pos)
        if not m:
            raise ParseError("expected E(..), Einv(..), D(..) or Diag(..,..)", pos, text)
        args, pos = _split_args(text, m.end())
        out.append((m.group(1), args))


def parse_relator(text, generators=None):
    """``a a j^-1`` -> (("a", 1), ("a", 1), ("j", -1)); ``^k`` expands powers."""
    out = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        mm = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?", tok)
        if not mm:
            raise ParseError(f"bad relator token {tok!r}", m.start(), text)
        name = mm.group(1)
        if generators is not None and name not in generators:
            raise ParseError(f"undeclared generator {name!r}", m.start(), text)
        power = int(mm.group(2)) if mm.group(2) else 1
        if power == 0:
            continue
        out.extend([(name, 1 if power > 0 else -1)] * abs(power))
    return tuple(out)


def format_relator(word):
    if not word:
        return "1"
    return " ".join(name if e == 1 else f"{name}^-1" for name, e in word)
