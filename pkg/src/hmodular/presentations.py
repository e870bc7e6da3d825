"""Finite presentations with matrix models: the built-in presentations of
E_2(Gamma_n(Z)), verification, abelianization, amalgam splitting and checks
that generator assignments respect the defining relations."""

from collections import Counter, deque
from dataclasses import dataclass

from .contexts import GammaContext, context_from_name, is_clifford
from .errors import MissingModel, PartitionNotDisjoint, RelatorCrossesFactors
from .finite_groups import FiniteGroup
from .parsing import parse_relator, format_relator
from .rings import lipschitz, hurwitz, order_o5, quadratic, u_hom_f, phi_quadratic
from .smith import abelian_invariants, in_row_lattice
from .vahlen import VahlenMatrix, E, D, diag, mat_inverse
from .words import Etok, Dtok, Diagtok, GenWord, eval_word, lattice_box, norm_2_3_elements

BUILTIN_KINDS = ("lemma53", "lemma54", "sl2z-classic")


class Presentation:
    """Generators, relators (tuples of (name, +-1)) and an optional matrix model."""

    def __init__(self, generators, relators, model=None, name=None):
        self.generators = list(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        known = set(self.generators)
        self.relators = []
        for rel in relators:
            rel = parse_relator(rel, known) if isinstance(rel, str) else tuple(rel)
            for g, e in rel:
                if g not in known:
                    raise ValueError(f"relator mentions undeclared generator {g!r}")
                if e not in (1, -1):
                    raise ValueError("relator letters carry exponent +-1")
            self.relators.append(rel)
        if model is not None:
            missing = [g for g in self.generators if g not in model]
            if missing:
                raise MissingModel(f"no matrix for {', '.join(missing)}")
            model = {g: model[g] for g in self.generators}
        self.model = model
        self.name = name

    def __repr__(self):
        return f"Presentation({self.name or ''}, {len(self.generators)} gens, {len(self.relators)} relators)"

    def restrict(self, gens, name=None):
        """Sub-presentation on ``gens`` keeping the relators that only mention them."""
        keep = set(gens)
        gens = [g for g in self.generators if g in keep]
        rels = [r for r in self.relators if {g for g, _ in r} <= keep]
        model = {g: self.model[g] for g in gens} if self.model is not None else None
        return Presentation(gens, rels, model, name=name)

    def exponent_matrix(self):
        idx = {g: i for i, g in enumerate(self.generators)}
        rows = []
        for rel in self.relators:
            row = [0] * len(self.generators)
            for g, e in rel:
                row[idx[g]] += e
            rows.append(row)
        return rows

    # text and JSON -----------------------------------------------------------

    def to_text(self):
        lines = ["gens: " + " ".join(self.generators)]
        lines += ["rel: " + format_relator(r) for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text, name=None):
        gens = None
        rels = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, body = line.partition(":")
            key = key.strip()
            if key == "gens":
                gens = body.split()
            elif key == "rel":
                if gens is None:
                    raise ValueError(f"line {lineno}: 'rel' before 'gens'")
                rels.append(parse_relator(body, set(gens)))
            else:
                raise ValueError(f"line {lineno}: expected 'gens:' or 'rel:'")
        if gens is None:
            raise ValueError("missing 'gens:' line")
        return cls(gens, rels, name=name)

    def to_json(self):
        out = {"generators": self.generators, "relators": [format_relator(r) for r in self.relators]}
        if self.name:
            out["name"] = self.name
        if self.model is not None:
            ctx = next(iter(self.model.values())).ctx
            out["model"] = {"ctx": ctx.name,
                            "images": {g: m.to_json()["rows"] for g, m in self.model.items()}}
        return out

    @classmethod
    def from_json(cls, data):
        model = None
        if "model" in data:
            ctx = context_from_name(data["model"]["ctx"])
            model = {g: VahlenMatrix.from_json({"rows": rows}, ctx)
                     for g, rows in data["model"]["images"].items()}
        gens = data["generators"]
        rels = [parse_relator(r, set(gens)) for r in data["relators"]]
        return cls(gens, rels, model, name=data.get("name"))


def _commutator(x, y):
    return f"{x} {y} {x}^-1 {y}^-1"


# built-in presentations ----------------------------------------------------

def _lemma53(n):
    hs = range(1, n)
    T = {h: f"T_i{h}" for h in hs}
    L = {h: f"L_i{h}" for h in hs}
    gens = ["J", "A", "T1"] + [T[h] for h in hs] + [L[h] for h in hs]
    rels = ["J^2"] + [_commutator("J", g) for g in gens if g != "J"]
    rels.append("A^2 J^-1")
    for h in hs:
        rels += [f"{L[h]}^2 J^-1", f"A {L[h]} A {L[h]} J^-1"]
    rels.append("T1 A T1 A T1 A")
    for h in hs:
        rels.append(" ".join([f"{T[h]} {L[h]} A"] * 3))
    for h in hs:
        rels.append(_commutator("T1", T[h]))
    for h in hs:
        for k in hs:
            if h < k:
                rels.append(_commutator(T[h], T[k]))
    if n >= 2:
        rels.append(f"{L[1]}^-1 T1 {L[1]}^-1 T1 J^-1")
    for h in hs:
        rels.append(f"{L[h]}^-1 {T[h]} {L[h]}^-1 {T[h]} J^-1")
    for h in hs:
        if h > 1:
            rels.append(f"{L[1]} T1 {L[1]} {L[h]}^-1 T1^-1 {L[h]}^-1")
    for h in hs:
        for k in hs:
            if h != k:
                rels.append(_commutator(L[h], T[k]))
    for h in hs:
        for k in hs:
            if h < k:
                rels.append(f"{L[h]} {L[k]} {L[h]} {L[k]} J^-1")
    return gens, rels


def _lemma54(n, printed=False):
    hs = range(1, n)
    b = {h: f"b_i{h}" for h in hs}
    d = {h: f"d_i{h}" for h in hs}
    gens = ["j", "a"] + [b[h] for h in hs] + ["c"] + [d[h] for h in hs]
    rels = ["j^2"] + [_commutator("j", g) for g in gens if g != "j"]
    rels.append("a^2 j^-1")
    for h in hs:
        rels += [f"{b[h]}^2 j^-1", f"a {b[h]} a {b[h]} j^-1"]
    rels.append("c^3")
    for h in hs:
        rels.append(f"{d[h]}^3")
    for h in hs:
        rels += [f"{b[h]} c {b[h]} c j^-1", f"a {d[h]} a {d[h]} j^-1", f"{d[h]} c^-1 {d[h]} c^-1 j^-1"]
    for h in hs:
        for k in hs:
            if h < k:
                rels.append(f"{b[h]} {b[k]} {b[h]} {b[k]} j^-1")
    for h in hs:
        for k in hs:
            if h != k:
                rels.append(f"{b[h]} {d[k]} {b[h]} {d[k]} j^-1")
    for h in hs:
        for k in hs:
            if h < k:
                # the matrices satisfy (d_h d_k^-1)^2 = j; "= 1" is kept only on request
                tail = "" if printed else " j^-1"
                rels.append(f"{d[h]} {d[k]}^-1 {d[h]} {d[k]}^-1{tail}")
    return gens, rels


def lemma53_model(ctx, units=None):
    """J = -I, A = E(0), T_1 = (1 1; 0 1), T_ih = (1 u_h; 0 1), L_ih = diag(u_h, -u_h).

    ``units`` defaults to i_1, ..., i_{n-1} in gamma:n; passing the images
    of the i_h (e.g. i, j, k in the Lipschitz order) gives the transported model.
    """
    if units is None:
        units = [ctx.generator(h) for h in range(1, ctx.n)]
    one, zero = ctx.one(), ctx.zero()
    model = {
        "J": VahlenMatrix(ctx, -one, zero, zero, -one),
        "A": E(ctx, zero),
        "T1": VahlenMatrix(ctx, one, one, zero, one),
    }
    for h, u in enumerate(units, 1):
        model[f"T_i{h}"] = VahlenMatrix(ctx, one, u, zero, one)
        model[f"L_i{h}"] = diag(ctx, u, -u)
    return model


def lemma54_model(ctx, units=None):
    """j = J, a = A, b_ih = A L_ih, c = T_1 A, d_ih = T_ih L_ih A."""
    m = lemma53_model(ctx, units)
    model = {"j": m["J"], "a": m["A"], "c": m["T1"] * m["A"]}
    h = 1
    while f"L_i{h}" in m:
        model[f"b_i{h}"] = m["A"] * m[f"L_i{h}"]
        model[f"d_i{h}"] = m[f"T_i{h}"] * m[f"L_i{h}"] * m["A"]
        h += 1
    return model


def builtin_presentation(kind, n=1, ctx=None, units=None, printed=False):
    """The presentations of E_2(Gamma_n(Z)) with their matrix models.

    ``ctx``/``units`` replace the default model gamma:n / i_h (used for the
    Lipschitz transport).  ``sl2z-classic`` ignores ``n``.  For lemma54 the
    last family reads (d_h d_k^-1)^2 = j, which is what the matrices satisfy;
    ``printed=True`` gives the variant with right-hand side 1.
    """
    if kind == "sl2z-classic":
        z = ctx or GammaContext(1)
        one, zero = z.one(), z.zero()
        model = {"a": E(z, zero), "c": VahlenMatrix(z, one, -one, one, zero)}
        return Presentation(["a", "c"], ["a^4", "c^6", "a^2 c^-3"], model, name="sl2z-classic")
    if kind not in ("lemma53", "lemma54"):
        raise ValueError(f"unknown presentation {kind!r}; expected one of {', '.join(BUILTIN_KINDS)}")
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = ctx or GammaContext(n)
    gens, rels = _lemma53(n) if kind == "lemma53" else _lemma54(n, printed)
    model = (lemma53_model if kind == "lemma53" else lemma54_model)(ctx, units)
    suffix = "-printed" if printed and kind == "lemma54" else ""
    return Presentation(gens, rels, model, name=f"{kind}{suffix}:{n}")


# verification --------------------------------------------------------------

def eval_relator(rel, images, inverses=None):
    inverses = inverses if inverses is not None else {}
    out = None
    for g, e in rel:
        if e > 0:
            m = images[g]
        else:
            if g not in inverses:
                inverses[g] = mat_inverse(images[g])
            m = inverses[g]
        out = m if out is None else out * m
    return out


def check_hom(p, images):
    """Does ``g -> images[g]`` kill every relator of ``p``?

    Returns ``(ok, witness)`` with the first failing relator as text.
    """
    missing = [g for g in p.generators if g not in images]
    if missing:
        raise MissingModel(f"no image for {', '.join(missing)}")
    inverses = {}
    for rel in p.relators:
        if not rel:
            continue
        value = eval_relator(rel, images, inverses)
        if not value.is_identity():
            return False, format_relator(rel)
    return True, None


def verify_presentation(p):
    if p.model is None:
        raise MissingModel("presentation has no matrix model")
    inverses = {}
    failures = []
    for rel in p.relators:
        if rel and not eval_relator(rel, p.model, inverses).is_identity():
            failures.append(format_relator(rel))
    return {"pass": not failures, "relators_checked": len(p.relators), "failures": failures}


def abelianization(p):
    return abelian_invariants(p.exponent_matrix(), len(p.generators))


# amalgams ------------------------------------------------------------------

@dataclass
class AmalgamSplit:
    factor_ac: Presentation
    factor_bc: Presentation
    amalgamated: Presentation
    partition: tuple

    def as_dict(self):
        a, b, c = self.partition
        return {
            "partition": {"A": a, "B": b, "C": c},
            "factor_AC": self.factor_ac.to_json(),
            "factor_BC": self.factor_bc.to_json(),
            "amalgamated_C": self.amalgamated.to_json(),
        }


def theorem_partition(n):
    """The partition used for the lemma54 splitting, as (A, B, C) with C inside A and B."""
    if n == 1:
        return ["j", "a"], ["j", "c"], ["j"]
    b = [f"b_i{h}" for h in range(1, n)]
    d = [f"d_i{h}" for h in range(1, n)]
    a_set = ["j", "a"] + b + ["c"] + d[:-1]
    b_set = ["j", "a"] + b[:-1] + ["c"] + d
    c_set = ["j", "a"] + b[:-1] + ["c"] + d[:-1]
    return a_set, b_set, c_set


def normalize_partition(gens, a_set, b_set, c_set):
    """Turn (A, B, C) with C contained in A and B into three disjoint sets.

    Raises PartitionNotDisjoint unless the result is a partition of ``gens``.
    """
    a_set, b_set, c_set = set(a_set), set(b_set), set(c_set)
    if c_set <= a_set and c_set <= b_set:
        a_set, b_set = a_set - c_set, b_set - c_set
    overlaps = (a_set & b_set) | (a_set & c_set) | (b_set & c_set)
    if overlaps:
        raise PartitionNotDisjoint(f"generators in more than one part: {', '.join(sorted(overlaps))}")
    union = a_set | b_set | c_set
    if union != set(gens):
        extra = union - set(gens)
        missing = set(gens) - union
        raise PartitionNotDisjoint(
            f"partition does not match the generators (unknown: {sorted(extra)}, missing: {sorted(missing)})")
    order = {g: i for i, g in enumerate(gens)}
    return tuple(sorted(s, key=order.get) for s in (a_set, b_set, c_set))


def amalgam_split(p, partition):
    a_set, b_set, c_set = normalize_partition(p.generators, *partition)
    ac, bc = set(a_set) | set(c_set), set(b_set) | set(c_set)
    for rel in p.relators:
        support = {g for g, _ in rel}
        if not (support <= ac or support <= bc):
            raise RelatorCrossesFactors(f"relator {format_relator(rel)} meets both factors",
                                        format_relator(rel))
    return AmalgamSplit(
        factor_ac=p.restrict(ac, name="AC"),
        factor_bc=p.restrict(bc, name="BC"),
        amalgamated=p.restrict(set(c_set), name="C"),
        partition=(a_set, b_set, c_set),
    )


def _relator_multiset(p):
    return Counter(format_relator(r) for r in p.relators)


def same_presentation(p, q):
    """Identical generator lists and relator multisets (after free reduction)."""
    def reduced(pres):
        out = Counter()
        for rel in pres.relators:
            stack = []
            for letter in rel:
                if stack and stack[-1] == (letter[0], -letter[1]):
                    stack.pop()
                else:
                    stack.append(letter)
            out[format_relator(tuple(stack))] += 1
        return out

    return list(p.generators) == list(q.generators) and reduced(p) == reduced(q)


def expected_amalgamated(n):
    """lemma54 at n-1; for n = 1 the cyclic group <j | j^2>."""
    if n == 1:
        return Presentation(["j"], ["j^2"], name="C2")
    return builtin_presentation("lemma54", n - 1)


def nontriviality_witness(p, split):
    """Abelian-level evidence that neither C -> factor is onto.

    ``parent``: some generator of A\\C (resp. B\\C) has a nonzero class in p^ab.
    ``factor``: some generator of A\\C (resp. B\\C) lies outside the image of C
    in the factor's own abelianization.
    """
    a_only, b_only, c_set = split.partition
    rows = p.exponent_matrix()
    idx = {g: i for i, g in enumerate(p.generators)}

    def unit(g, index):
        v = [0] * len(index)
        v[index[g]] = 1
        return v

    out = {}
    for label, only, factor in (("A", a_only, split.factor_ac), ("B", b_only, split.factor_bc)):
        parent = [g for g in only if not in_row_lattice(rows, unit(g, idx))]
        fidx = {g: i for i, g in enumerate(factor.generators)}
        frows = factor.exponent_matrix() + [unit(c, fidx) for c in c_set]
        outside = [g for g in only if not in_row_lattice(frows, unit(g, fidx))]
        out[label] = {"parent_nonzero": parent, "outside_C_image": outside}
    out["holds"] = all(out[k]["parent_nonzero"] for k in ("A", "B"))
    out["factor_level_holds"] = all(out[k]["outside_C_image"] for k in ("A", "B"))
    return out


def model_witness(p, split):
    """Matrix-level evidence that C generates a proper subgroup of each factor.

    For n >= 2 every C-image has entries in the subalgebra without i_{n-1},
    which is closed under products and inverses, so any generator whose image
    involves i_{n-1} lies outside <C>.  For n = 1, <C> = <j> = {I, -I}.
    """
    a_only, b_only, c_set = split.partition
    model = p.model
    ctx = next(iter(model.values())).ctx
    n = ctx.n

    if n == 1:
        small = {VahlenMatrix.identity(ctx), model["j"]}

        def outside(g):
            return model[g] not in small
        ok_c = all(model[c] in small for c in c_set)
    else:
        top = n - 1

        def uses_top(m):
            return any(top in idx for x in m.entries for idx, _ in x.terms())

        def outside(g):
            return uses_top(model[g])
        ok_c = not any(uses_top(model[c]) for c in c_set)
    out = {"C_in_subalgebra": ok_c,
           "A": [g for g in a_only if outside(g)],
           "B": [g for g in b_only if outside(g)]}
    out["holds"] = ok_c and bool(out["A"]) and bool(out["B"])
    return out


def split_report(n, partition=None):
    """Split lemma54 at n and run every check on the result."""
    p = builtin_presentation("lemma54", n)
    split = amalgam_split(p, partition or theorem_partition(n))
    report = {
        "n": n,
        "partition": dict(zip("ABC", split.partition)),
        "factor_AC": verify_presentation(split.factor_ac)["pass"],
        "factor_BC": verify_presentation(split.factor_bc)["pass"],
        "C_matches_previous": same_presentation(split.amalgamated, expected_amalgamated(n)),
    }
    if n >= 2:
        report["witness"] = nontriviality_witness(p, split)
    report["model_witness"] = model_witness(p, split)
    return report, split


# relation instances and maps between contexts ------------------------------

def _de2_cayley_relations(ctx, units):
    """Cayley-edge relations of the finite group generated by the D(mu)."""
    gens = [D(ctx, mu) for mu in units]
    ident = VahlenMatrix.identity(ctx)
    words = {ident: ()}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for i, s in enumerate(gens):
            h = g * s
            if h not in words:
                words[h] = words[g] + (i,)
                queue.append(h)
    out = []
    for g, w in words.items():
        for i, s in enumerate(gens):
            lhs = [Dtok(units[k]) for k in w + (i,)]
            rhs = [Dtok(units[k]) for k in words[g * s]]
            if lhs != rhs:
                out.append(("DE2", lhs, rhs))
    return out


def relation_instances(ctx, radius=1):
    """Defining relations of E_2 as (family, lhs tokens, rhs tokens).

    R1 and R3' run over the coordinate box of ``radius``; R2 and R3' over the
    unit set B (gamma:n) or all units; DE2 is the multiplication table of
    the D(mu); alpha covers every element of norm 2 or 3.
    """
    units = ctx.unit_basis() if is_clifford(ctx) else ctx.units()
    box = lattice_box(ctx, radius)
    zero, one = ctx.zero(), ctx.one()
    E0 = Etok(zero)
    out = []
    for x in box:
        for y in box:
            out.append(("R1", [Etok(x), E0, Etok(y)], [E0, E0, Etok(x + y)]))
    for mu in units:
        out.append(("R2", [Etok(mu), Etok(mu.inverse()), Etok(mu)], [E0, E0, Dtok(mu)]))
    for x in box:
        for mu in units:
            out.append(("R3'", [Etok(x), Dtok(mu)], [Dtok(mu.inverse()), Etok(mu * x * mu)]))
    out.append(("R4", [E0, E0], [Dtok(-one)]))
    out += _de2_cayley_relations(ctx, units)
    for a in norm_2_3_elements(ctx):
        m = int(a.norm_sq())
        out.append(("alpha", [Etok(a.conj()), Etok(a)] * m, [E0, E0]))
    return out


def _map_tokens(tokens, fmap):
    out = []
    for t in tokens:
        if t.kind == "E":
            out.append(Etok(fmap(t.args[0]), t.exp))
        elif t.kind == "D":
            out.append(Dtok(fmap(t.args[0])))
        else:
            out.append(Diagtok(*(fmap(x) for x in t.args)))
    return out


def check_relation_map(ctx, target, fmap, radius=1, stop_at_first=False):
    """Evaluate the image of every relation instance of ``ctx`` in ``target``.

    Returns a report with per-family counts and every failing instance.
    """
    families = {}
    failures = []
    for fam, lhs, rhs in relation_instances(ctx, radius):
        left = eval_word(GenWord(target, _map_tokens(lhs, fmap), validate=False))
        right = eval_word(GenWord(target, _map_tokens(rhs, fmap), validate=False))
        ok = left == right
        stats = families.setdefault(fam, {"checked": 0, "failed": 0})
        stats["checked"] += 1
        if not ok:
            stats["failed"] += 1
            failures.append({
                "family": fam,
                "relation": f"{' '.join(map(str, lhs))} = {' '.join(map(str, rhs))}",
                "image": f"{' '.join(map(str, _map_tokens(lhs, fmap)))} = "
                         f"{' '.join(map(str, _map_tokens(rhs, fmap)))}",
            })
            if stop_at_first:
                break
    return {"source": ctx.name, "target": target.name, "pass": not failures,
            "families": families, "failures": failures}


def phi_map():
    """phi: Z[sqrt(-3)] -> I_11 as (source, target, function)."""
    src, tgt = quadratic(3), quadratic(11, maximal=True)
    return src, tgt, lambda x: phi_quadratic(x, tgt)


def n3quat_maps():
    """i_h -> i, j, k from gamma:4 to the Lipschitz order, and its inverse."""
    g4, lip = GammaContext(4), lipschitz()

    def forward(x):
        return lip.element(x.vector_coords())

    def backward(q):
        return g4.vector(q.amb)

    return (g4, lip, forward), (lip, g4, backward)


def n3quat_report(radius=1):
    """Compare the E_2 presentations of Gamma_4(Z) and of the Lipschitz order.

    Checks the lemma53/lemma54 relators in the transported Lipschitz model and
    the relation instances in both directions.
    """
    (g4, lip, fwd), (lip2, g4b, bwd) = n3quat_maps()
    ijk = [lip.element(v) for v in ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))]
    out = {}
    for kind in ("lemma53", "lemma54"):
        p = builtin_presentation(kind, 4)
        q = builtin_presentation(kind, 4, ctx=lip, units=ijk)
        out[kind] = {"gamma4": verify_presentation(p)["pass"], "lipschitz": verify_presentation(q)["pass"]}
    out["forward"] = check_relation_map(g4, lip, fwd, radius)
    out["inverse"] = check_relation_map(lip2, g4b, bwd, radius)
    out["pass"] = (all(v["gamma4"] and v["lipschitz"] for k, v in out.items() if k.startswith("lemma"))
                   and out["forward"]["pass"] and out["inverse"]["pass"])
    return out


def counterexample_o5():
    """The relation (E(1 - w) E(w))^2 = E(0)^2 in O5 for w = (1+i+j)/2 and its image under f."""
    o5, o2 = order_o5(), hurwitz()
    w = o5.from_coords((0, 1, 0, 0))
    lhs = (E(o5, o5.one() - w) * E(o5, w)) ** 2
    holds = lhs == E(o5, o5.zero()) ** 2
    fw = u_hom_f(w, o2)
    f1w = u_hom_f(o5.one() - w, o2)
    image = (E(o2, f1w) * E(o2, fw)) ** 2
    image_holds = image == E(o2, o2.zero()) ** 2
    return {
        "relation_holds_in_O5": holds,
        "image_holds_in_O2": image_holds,
        "omega": str(w),
        "norm_sq_omega": str(w.norm_sq()),
        "f_omega": str(fw),
        "f_one_minus_omega": str(f1w),
        "image_lhs": image.to_json()["rows"],
    }


def ge2_index_witness():
    """|U(L)^ab| and the class of diag(i, j) in GE_2(L)/E_2(L) = U(L)^ab.

    A word in the GE_2 generators maps to U^ab by E(x) -> 1 and
    [mu, nu] -> class of mu*nu; E_2 is the kernel.
    """
    from .vahlen import gl2_membership
    from .words import decompose

    lip = lipschitz()
    units = lip.units()
    i, j = (lip.element(v) for v in ((0, 1, 0, 0), (0, 0, 1, 0)))
    group = FiniteGroup([i, j], lip.one())
    ab = group.abelianization()
    m = diag(lip, i, j)
    word = decompose(m)
    cls = word_class(word, group)
    commutators = group.commutator_subgroup()
    return {
        "units": len(units),
        "unit_group_order": group.order(),
        "abelianization": ab.as_dict(),
        "abelianization_order": ab.order,
        "diag_in_GL2": gl2_membership(m),
        "decomposition": str(word),
        "class_trivial": group.is_trivial_in_abelianization(cls),
        "class_in_commutator_subgroup": cls in commutators,
        "class_element": str(cls),
    }


def word_class(word, group):
    """Image of a GE_2 word in U^ab, returned as a unit (a coset representative)."""
    out = group.identity
    for t in word.tokens:
        if t.kind == "Diag":
            out = out * t.args[0] * t.args[1]
    return out


__all__ = [
    "Presentation", "AmalgamSplit", "builtin_presentation", "verify_presentation", "abelianization",
    "amalgam_split", "normalize_partition", "theorem_partition", "same_presentation", "expected_amalgamated",
    "nontriviality_witness", "model_witness", "split_report", "check_hom", "eval_relator", "relation_instances",
    "check_relation_map", "phi_map", "n3quat_maps", "n3quat_report", "counterexample_o5",
    "ge2_index_witness", "word_class", "lemma53_model", "lemma54_model", "BUILTIN_KINDS",
]
