"""Words in E(x), D(mu) and [mu, nu]; evaluation, the Euclidean decomposition
and matrix-level checks of the relation families."""

import random
from dataclasses import dataclass
from itertools import product

from .clifford import CliffordElement
from .contexts import is_clifford, is_quaternion
from .errors import NotAMember, ReductionStalled, UnsupportedContext, ContextMismatch, HModularError
from .parsing import parse_word_tokens
from .rings import ge2_classification, GE2_RING
from .vahlen import (
    VahlenMatrix, E, D, diag, mat_inverse, slplus_membership, gl2_membership,
)

KINDS = ("E", "D", "Diag")


class InvalidToken(HModularError, ValueError):
    pass


@dataclass(frozen=True)
class GenToken:
    """E(x) with exponent +-1, D(mu) or Diag(mu, nu).

    Inverses of diagonal tokens are again diagonal tokens, so only E carries
    an exponent.
    """

    kind: str
    args: tuple
    exp: int = 1

    def inverse(self):
        if self.kind == "E":
            return GenToken("E", self.args, -self.exp)
        if self.kind == "D":
            return GenToken("D", (self.args[0].inverse(),))
        return GenToken("Diag", tuple(x.inverse() for x in self.args))

    def __str__(self):
        if self.kind == "E":
            return f"{'Einv' if self.exp < 0 else 'E'}({self.args[0]})"
        return f"{self.kind}({', '.join(str(x) for x in self.args)})"


def Etok(x, exp=1):
    return GenToken("E", (x,), exp)


def Dtok(mu):
    return GenToken("D", (mu,))


def Diagtok(mu, nu):
    return GenToken("Diag", (mu, nu))


def _is_unit(ctx, x):
    if x.is_zero():
        return False
    if is_clifford(ctx):
        return x.is_integral() and x.norm_sq() == 1 and len(x.terms()) == 1
    return x.is_integral() and x.norm_sq() == 1


def validate_token(ctx, tok):
    if tok.kind == "E":
        (x,) = tok.args
        if not ctx.contains(x):
            where = "V^n(Z)" if is_clifford(ctx) else ctx.label
            raise InvalidToken(f"E argument {x} is not in {where}")
        return
    if tok.kind == "D":
        (mu,) = tok.args
        if not _is_unit(ctx, mu):
            raise InvalidToken(f"D argument {mu} is not a unit")
        if is_clifford(ctx) and not (mu * mu.inverse().reversion()).is_scalar():
            raise InvalidToken(f"D({mu}) is not admissible")
        return
    if tok.kind == "Diag":
        mu, nu = tok.args
        if not (_is_unit(ctx, mu) and _is_unit(ctx, nu)):
            raise InvalidToken(f"Diag arguments {mu}, {nu} are not units")
        if is_clifford(ctx) and not (mu * nu.reversion()).is_scalar():
            raise InvalidToken(f"Diag({mu}, {nu}): mu nu* is not a scalar")
        return
    raise InvalidToken(f"unknown token kind {tok.kind!r}")


def eval_token(ctx, tok):
    if tok.kind == "E":
        x = tok.args[0]
        if tok.exp > 0:
            return E(ctx, x)
        return VahlenMatrix(ctx, 0, -1, 1, x)
    if tok.kind == "D":
        return D(ctx, tok.args[0])
    return diag(ctx, *tok.args)


class GenWord:
    """A word over the generator tokens of one context."""

    def __init__(self, ctx, tokens=(), validate=True):
        self.ctx = ctx
        self.tokens = tuple(tokens)
        if validate:
            for tok in self.tokens:
                validate_token(ctx, tok)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __mul__(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx.name} vs {other.ctx.name}")
        return GenWord(self.ctx, self.tokens + other.tokens, validate=False)

    def __eq__(self, other):
        return isinstance(other, GenWord) and self.ctx == other.ctx and self.tokens == other.tokens

    def inverse(self):
        return GenWord(self.ctx, [t.inverse() for t in reversed(self.tokens)], validate=False)

    def free_reduce(self):
        out = []
        for tok in self.tokens:
            if out and out[-1] == tok.inverse():
                out.pop()
            else:
                out.append(tok)
        return GenWord(self.ctx, out, validate=False)

    def elem_only(self):
        return all(t.kind == "E" for t in self.tokens)

    def __str__(self):
        return " ".join(str(t) for t in self.tokens)

    def __repr__(self):
        return f"GenWord({self.ctx.name}, {str(self)!r})"

    def to_json(self):
        out = []
        for t in self.tokens:
            name = "Einv" if t.kind == "E" and t.exp < 0 else t.kind
            out.append({"gen": name, "args": [str(x) for x in t.args]})
        return out

    @classmethod
    def from_json(cls, ctx, data):
        text = " ".join(f"{t['gen']}({', '.join(t['args'])})" for t in data)
        return parse_word(text, ctx)


def parse_word(text, ctx):
    from .errors import ParseError

    tokens = []
    for kind, args in parse_word_tokens(text):
        values = []
        for arg, offset in args:
            try:
                values.append(ctx.parse(arg))
            except ParseError as exc:
                raise ParseError(exc.reason, offset + exc.offset, text) from None
        want = 2 if kind == "Diag" else 1
        if len(values) != want:
            raise ParseError(f"{kind} takes {want} argument(s)", args[0][1], text)
        if kind == "Einv":
            tokens.append(Etok(values[0], -1))
        else:
            tokens.append(GenToken(kind, tuple(values)))
    return GenWord(ctx, tokens)


def eval_word(word):
    out = VahlenMatrix.identity(word.ctx)
    for tok in word.tokens:
        out = out * eval_token(word.ctx, tok)
    return out


# decomposition ------------------------------------------------------------

def de2_decompose(u):
    """D-tokens whose product is diag(u, (u*)^-1) for a unit u of Gamma_n(Z)."""
    n = u.n
    terms = u.terms()
    if len(terms) != 1 or abs(terms[0][1]) != 1:
        raise NotAMember(f"{u} is not a unit of Gamma_{n}(Z)")
    indices, sign = terms[0]
    tokens = [Dtok(CliffordElement.scalar(n, -1))] if sign < 0 else []
    tokens += [Dtok(CliffordElement.generator(n, h)) for h in indices]
    return tokens


def _d_as_elementary(ctx, mu):
    """D(mu) = E(0)^2 E(mu) E(mu^-1) E(mu); D(-1) = E(0)^2 and D(1) is empty."""
    zero = ctx.zero()
    if mu == ctx.one():
        return []
    if mu == -ctx.one():
        return [Etok(zero), Etok(zero)]
    return [Etok(zero), Etok(zero), Etok(mu), Etok(mu.inverse()), Etok(mu)]


def _tidy(ctx, tokens):
    """Pull out adjacent E(0) pairs; E(0)^2 = -I is central, so only their parity matters."""
    e0 = Etok(ctx.zero())
    out = []
    flips = 0
    for tok in tokens:
        if tok == e0 and out and out[-1] == e0:
            out.pop()
            flips += 1
        else:
            out.append(tok)
    if flips % 2:
        out += [e0, e0]
    return out


def _supported_ring(ctx):
    if is_quaternion(ctx):
        return ctx.name in ("lipschitz", "hurwitz", "O3", "O5")
    return ge2_classification(ctx) == GE2_RING


def decompose(m, trace=None):
    """Write ``m`` as a word in the generators.

    For gamma:n (n <= 4) the input must lie in SL_+(Gamma_n(Z)) and the result
    uses E tokens only.  For the Euclidean orders the input must lie in GL_2
    of the order; a single Diag token may appear.  ``trace`` (a list) receives
    the norm of the upper-right entry before every step.
    """
    ctx = m.ctx
    if is_clifford(ctx):
        if ctx.n > 4:
            raise UnsupportedContext("decompose is only available for n <= 4")
        if not slplus_membership(m, integral=True):
            raise NotAMember("matrix is not in SL_+(Gamma_n(Z))")
    else:
        if not _supported_ring(ctx):
            raise UnsupportedContext(f"{ctx.label} is not a supported GE_2 context")
        if not gl2_membership(m):
            raise NotAMember(f"matrix is not in GL_2({ctx.label})")

    zero = ctx.zero()
    qs = []
    cur = m
    while not cur.b.is_zero():
        a, b = cur.a, cur.b
        if trace is not None:
            trace.append(b.norm_sq())
        z = b.inverse() * a
        if is_clifford(ctx) and not z.is_vector():
            raise ReductionStalled("b^-1 a is not a vector", cur)
        q = ctx.nearest(z)
        if (z - q).norm_sq() >= 1:
            raise ReductionStalled(f"no remainder shorter than |b| (|z - q|^2 = {(z - q).norm_sq()})", cur)
        # right multiplication by E(0)^3 E(-q) E(0) turns the first row (a, b) into (-b, a - bq)
        cur = cur * E(ctx, zero) ** 3 * E(ctx, -q) * E(ctx, zero)
        qs.append(q)

    a, c, d = cur.a, cur.c, cur.d
    y = d.inverse() * c
    if not ctx.contains(y):
        raise NotAMember(f"d^-1 c = {y} is not integral")
    if is_clifford(ctx):
        tokens = []
        for tok in de2_decompose(a):
            tokens += _d_as_elementary(ctx, tok.args[0])
    elif d == a.inverse():
        tokens = _d_as_elementary(ctx, a)
    else:
        tokens = [Diagtok(a, d)]
    if not y.is_zero():
        tokens += [Etok(zero)] * 3 + [Etok(y)]
    for q in reversed(qs):
        tokens += [Etok(q), Etok(zero), Etok(zero)]
    word = GenWord(ctx, _tidy(ctx, tokens), validate=False)
    if eval_word(word) != m:
        raise ReductionStalled("decomposition does not re-evaluate to the input", m)
    return word


# random words -------------------------------------------------------------

def lattice_box(ctx, radius=1):
    """Every element with coordinates in [-radius, radius] (vectors for gamma:n)."""
    r = range(-radius, radius + 1)
    if is_clifford(ctx):
        return [ctx.vector(c) for c in product(r, repeat=ctx.n)]
    return [ctx.from_coords(c) for c in product(r, repeat=ctx.dim)]


def random_word(ctx, length, rng=None, radius=1, diagonals=None):
    """Random word of E^{+-1} tokens; with ``diagonals`` also Diag tokens of units.

    ``diagonals`` defaults to True for quaternion orders (GE_2 words).
    """
    rng = rng or random.Random(0)
    if diagonals is None:
        diagonals = is_quaternion(ctx)
    box = lattice_box(ctx, radius)
    units = ctx.unit_basis() if is_clifford(ctx) else ctx.units()
    tokens = []
    for _ in range(length):
        if diagonals and rng.random() < 0.2:
            tokens.append(Diagtok(rng.choice(units), rng.choice(units)))
        else:
            tokens.append(Etok(rng.choice(box), rng.choice((1, -1))))
    return GenWord(ctx, tokens, validate=False)


# relation families ---------------------------------------------------------

FAMILIES = ("R1", "R2", "R3", "R4", "R5", "alpha", "eq29")


def _units_basis(ctx):
    """The set B of units used by R2, R3' and eq29: +-i_h, or all units of an order."""
    return ctx.unit_basis() if is_clifford(ctx) else ctx.units()


def norm_2_3_elements(ctx):
    """All a with norm_sq(a) in {2, 3}: integral vectors for gamma:n, order elements otherwise."""
    if is_clifford(ctx):
        return [x for x in lattice_box(ctx, 1) if x.norm_sq() in (2, 3)]
    from .rings import short_vectors

    return [x for x in short_vectors(ctx, 3) if x.norm_sq() in (2, 3)]


def alpha_relation_holds(ctx, a):
    """(E(conj a) E(a))^m = E(0)^2 with m = norm_sq(a)."""
    m = int(a.norm_sq())
    return (E(ctx, a.conj()) * E(ctx, a)) ** m == E(ctx, ctx.zero()) ** 2


def _limited(items, budget, rng):
    items = list(items)
    if budget is None or len(items) <= budget:
        return items, True
    return rng.sample(items, budget), False


def verify_relation_families(ctx, families=FAMILIES, radius=1, budget=4000, seed=0):
    """Check the relation families as matrix identities.

    Returns ``{family: {"pass", "checked", "exhaustive", "counterexample"}}``.
    Families whose instance count exceeds ``budget`` are sampled with ``seed``.
    """
    rng = random.Random(seed)
    box = lattice_box(ctx, radius)
    units = _units_basis(ctx)
    zero, one = ctx.zero(), ctx.one()
    E0 = E(ctx, zero)
    minus_i = E0 * E0
    report = {}

    def run(name, cases, check, describe):
        cases, exhaustive = _limited(cases, budget, rng)
        bad = None
        for case in cases:
            if not check(*case):
                bad = describe(*case)
                break
        report[name] = {"pass": bad is None, "checked": len(cases), "exhaustive": exhaustive,
                        "counterexample": bad}

    for fam in families:
        if fam == "R1":
            run("R1", product(box, box),
                lambda x, y: E(ctx, x) * E0 * E(ctx, y) == minus_i * E(ctx, x + y),
                lambda x, y: {"x": str(x), "y": str(y)})
        elif fam == "R2":
            run("R2", [(mu,) for mu in units],
                lambda mu: E(ctx, mu) * E(ctx, mu.inverse()) * E(ctx, mu) == minus_i * D(ctx, mu),
                lambda mu: {"mu": str(mu)})
        elif fam == "R3":
            if is_clifford(ctx):
                allu = ctx.units()
                pairs = [(mu, nu) for mu in allu for nu in allu if (mu * nu.reversion()).is_scalar()
                         and (nu * mu.reversion()).is_scalar()]
            else:
                pairs = [(mu, nu) for mu in units for nu in units]

            def r3(x, mu, nu):
                y = nu.inverse() * x * mu
                if not ctx.contains(y):
                    return False
                return E(ctx, x) * diag(ctx, mu, nu) == diag(ctx, nu, mu) * E(ctx, y)

            def r3p(x, mu):
                return E(ctx, x) * D(ctx, mu) == D(ctx, mu.inverse()) * E(ctx, mu * x * mu)

            cases = [("R3", x, mu, nu) for x in box for mu, nu in pairs]
            cases += [("R3'", x, mu, None) for x in box for mu in units]
            run("R3", cases,
                lambda tag, x, mu, nu: r3(x, mu, nu) if tag == "R3" else r3p(x, mu),
                lambda tag, x, mu, nu: {"form": tag, "x": str(x), "mu": str(mu),
                                        **({"nu": str(nu)} if nu is not None else {})})
        elif fam == "R4":
            run("R4", [()], lambda: E0 * E0 == D(ctx, -one), lambda: {})
        elif fam == "R5":
            run("R5", [(x,) for x in box],
                lambda x: mat_inverse(E(ctx, x)) == E0 * E(ctx, -x) * E0,
                lambda x: {"x": str(x)})
        elif fam == "alpha":
            run("alpha", [(a,) for a in norm_2_3_elements(ctx)],
                lambda a: alpha_relation_holds(ctx, a),
                lambda a: {"a": str(a), "m": str(a.norm_sq())})
        elif fam == "eq29":
            def eq29(x, al, y):
                ai = al.inverse()
                return E(ctx, x) * E(ctx, al) * E(ctx, y) == E(ctx, x - ai) * D(ctx, al) * E(ctx, y - ai)

            run("eq29", [(x, al, y) for x in box for al in units for y in box], eq29,
                lambda x, al, y: {"x": str(x), "alpha": str(al), "y": str(y)})
        else:
            raise ValueError(f"unknown relation family {fam!r}")
    return report


__all__ = [
    "GenToken", "GenWord", "Etok", "Dtok", "Diagtok", "InvalidToken", "validate_token", "eval_token",
    "eval_word", "parse_word", "de2_decompose", "decompose", "random_word", "lattice_box",
    "verify_relation_families", "alpha_relation_holds", "norm_2_3_elements", "FAMILIES",
]
