"""Command-line front end.

Every subcommand prints one JSON document (``--json``) or the same data as
``key: value`` lines.  Domain answers that are "false" are data and exit 0;
parse and usage errors print a structured error and exit 2, other domain
errors exit 1.
"""

import argparse
import json
import random
import sys

from .clifford import enumerate_units, gamma_membership
from .contexts import context_from_name, is_clifford
from .errors import HModularError, ParseError
from .presentations import (
    BUILTIN_KINDS,
    Presentation,
    abelianization,
    builtin_presentation,
    check_hom,
    check_relation_map,
    counterexample_o5,
    n3quat_maps,
    phi_map,
    split_report,
    verify_presentation,
)
from .rings import discretely_normed, ge2_classification, hurwitz, order_o5, u_hom_f
from .vahlen import (
    VahlenMatrix,
    gl2_membership,
    gl_membership,
    mat_inverse,
    slplus_membership,
)
from .words import FAMILIES, decompose, eval_word, parse_word, verify_relation_families


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# input helpers ---------------------------------------------------------------

def _read_input(args, attr="input"):
    if getattr(args, "file", None):
        if args.file == "-":
            return sys.stdin.read().strip()
        with open(args.file) as fh:
            return fh.read().strip()
    value = getattr(args, attr, None)
    if value is None:
        raise UsageError("no input given (pass it inline or with --file)")
    return value


def _load_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON for {what}: {exc.msg}", exc.pos, text) from None


def parse_matrix(text, ctx):
    """``[["a","b"],["c","d"]]`` or ``{"ctx":..., "rows": ...}`` -> VahlenMatrix."""
    data = _load_json(text, "matrix") if isinstance(text, str) else text
    if isinstance(data, dict):
        data = data.get("rows")
    if (not isinstance(data, list) or len(data) != 2
            or not all(isinstance(r, list) and len(r) == 2 for r in data)):
        raise ParseError("a matrix is a 2x2 JSON array of entries", 0, str(text))
    entries = []
    for r, row in enumerate(data):
        for c, x in enumerate(row):
            src = str(x) if not isinstance(x, str) else x
            try:
                entries.append(ctx.parse(src))
            except ParseError as exc:
                err = ParseError(exc.reason, exc.offset, src)
                err.entry = [r, c]
                raise err from None
    return VahlenMatrix(ctx, *entries)


def _matrix_rows(m):
    return m.to_json()["rows"]


def _ctx(args):
    try:
        return context_from_name(args.ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# commands --------------------------------------------------------------------

def cmd_eval(args):
    ctx = _ctx(args)
    text = _read_input(args)
    if args.word:
        word = parse_word(text, ctx)
        return {"ctx": ctx.name, "word": str(word), "matrix": _matrix_rows(eval_word(word))}
    x = ctx.parse(text)
    out = {"ctx": ctx.name, "value": str(x), "norm_sq": str(x.norm_sq())}
    if is_clifford(ctx):
        out["in_gamma"] = not x.is_zero() and gamma_membership(x)
        out["in_gamma_Z"] = not x.is_zero() and gamma_membership(x, integral=True)
    else:
        out["integral"] = x.is_integral()
    return out


def cmd_matmul(args):
    ctx = _ctx(args)
    if args.file:
        items = _load_json(_read_input(args), "matrix list")
    else:
        items = args.matrices
    if len(items) < 1:
        raise UsageError("matmul needs at least one matrix")
    out = VahlenMatrix.identity(ctx)
    for item in items:
        out = out * parse_matrix(item, ctx)
    return {"ctx": ctx.name, "product": _matrix_rows(out)}


def cmd_matinv(args):
    ctx = _ctx(args)
    m = parse_matrix(_read_input(args), ctx)
    return {"ctx": ctx.name, "inverse": _matrix_rows(mat_inverse(m))}


def cmd_member(args):
    ctx = _ctx(args)
    text = _read_input(args)
    if args.kind == "gamma":
        if not is_clifford(ctx):
            raise UsageError("--kind gamma needs a gamma:n context")
        x = ctx.parse(text)
        member = not x.is_zero() and gamma_membership(x, args.integral)
    elif args.kind == "gl2":
        member = gl2_membership(parse_matrix(text, ctx))
    else:
        m = parse_matrix(text, ctx)
        check = gl_membership if args.kind == "gl" else slplus_membership
        member = check(m, args.integral)
    return {"ctx": ctx.name, "kind": args.kind, "integral": args.integral, "member": member}


def cmd_decompose(args):
    ctx = _ctx(args)
    m = parse_matrix(_read_input(args), ctx)
    word = decompose(m)
    return {"ctx": ctx.name, "word": str(word), "tokens": word.to_json(), "length": len(word),
            "verified": eval_word(word) == m}


def _presentation(args):
    if args.presentation not in BUILTIN_KINDS:
        raise UsageError(f"unknown presentation {args.presentation!r}; choose from {', '.join(BUILTIN_KINDS)}")
    return builtin_presentation(args.presentation, args.n, printed=getattr(args, "printed", False))


def cmd_verify(args):
    p = _presentation(args)
    res = verify_presentation(p)
    out = {"presentation": p.name, "pass": res["pass"], "relators_checked": res["relators_checked"]}
    if res["failures"]:
        out["failures"] = res["failures"]
    return out


def cmd_relations(args):
    ctx = _ctx(args)
    families = [args.family] if args.family else list(FAMILIES)
    report = verify_relation_families(ctx, families, radius=args.radius, budget=args.budget, seed=args.seed)
    return {"ctx": ctx.name, "pass": all(r["pass"] for r in report.values()), "families": report}


def cmd_abelianize(args):
    p = _presentation(args)
    return abelianization(p).as_dict()


def cmd_split(args):
    if args.presentation != "lemma54":
        raise UsageError("split is implemented for the lemma54 presentation")
    partition = None
    if args.partition:
        data = _load_json(args.partition, "partition")
        if isinstance(data, dict):
            partition = tuple(data.get(k, []) for k in "ABC")
        else:
            partition = tuple(data)
        if len(partition) != 3:
            raise ParseError("partition must have three parts A, B, C", 0, args.partition)
    report, split = split_report(args.n, partition)
    report["factor_AC_presentation"] = split.factor_ac.to_text()
    report["factor_BC_presentation"] = split.factor_bc.to_text()
    report["amalgamated_presentation"] = split.amalgamated.to_text()
    return report


def cmd_classify_order(args):
    ctx = _ctx(args)
    return {"ctx": ctx.name, "discretely_normed": discretely_normed(ctx),
            "classification": ge2_classification(ctx)}


def cmd_units(args):
    units, fp = enumerate_units(args.n)
    out = fp.as_dict()
    out["n"] = args.n
    if args.list:
        out["units"] = [str(u) for u in units]
    return out


def cmd_counterexample_o5(args):
    return counterexample_o5()


def _named_map(name, radius):
    if name == "phi":
        src, tgt, fmap = phi_map()
    elif name == "f":
        src, tgt = order_o5(), hurwitz()

        def fmap(x):
            return u_hom_f(x, tgt)
    elif name == "n3quat":
        src, tgt, fmap = n3quat_maps()[0]
    elif name == "n3quat-inverse":
        src, tgt, fmap = n3quat_maps()[1]
    else:
        raise UsageError(f"unknown map {name!r}")
    return check_relation_map(src, tgt, fmap, radius=radius)


def cmd_check_hom(args):
    """``{"map": name}`` or ``{"presentation": ..., "n": .., "ctx": .., "images": {gen: matrix}}``."""
    spec = _load_json(_read_input(args, "spec"), "hom spec")
    if not isinstance(spec, dict):
        raise ParseError("hom spec must be a JSON object", 0, str(spec))
    if "map" in spec:
        return _named_map(spec["map"], int(spec.get("radius", 1)))
    if "presentation" in spec:
        src = spec["presentation"]
        if isinstance(src, dict):
            p = Presentation.from_json(src)
        elif src in BUILTIN_KINDS:
            p = builtin_presentation(src, int(spec.get("n", 1)))
        else:
            p = Presentation.from_text(src)
        ctx = context_from_name(spec["ctx"])
        images = {g: parse_matrix(m, ctx) for g, m in spec.get("images", {}).items()}
        ok, witness = check_hom(p, images)
        return {"presentation": p.name, "ctx": ctx.name, "pass": ok, "failing_relator": witness}
    raise UsageError('hom spec needs a "map" or a "presentation" key')


# plumbing ----------------------------------------------------------------------

def build_parser():
    ap = _Parser(prog="hmodular", description="Exact computations with Clifford-Vahlen and quaternion 2x2 groups.")
    ap.add_argument("--json", action="store_true", help="print JSON")
    ap.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help, ctx=False, inp=False):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        p.add_argument("--file", help="read the input from a file ('-' for stdin)")
        if ctx:
            p.add_argument("--ctx", required=True, help="gamma:N, Z, Zsqrt:-D, Imax:-D, lipschitz, hurwitz, O3, O5")
        if inp:
            p.add_argument("input", nargs="?")
        return p

    p = add("eval", cmd_eval, "parse and canonicalize an element, or evaluate a word", ctx=True, inp=True)
    p.add_argument("--word", action="store_true", help="treat the input as a generator word")
    p = add("matmul", cmd_matmul, "multiply matrices", ctx=True)
    p.add_argument("matrices", nargs="*")
    add("matinv", cmd_matinv, "exact matrix inverse", ctx=True, inp=True)
    p = add("member", cmd_member, "membership tests", ctx=True, inp=True)
    p.add_argument("--kind", choices=("gamma", "gl", "slplus", "gl2"), required=True)
    p.add_argument("--integral", action="store_true")
    add("decompose", cmd_decompose, "write a matrix as a word in the generators", ctx=True, inp=True)
    for name, func in (("verify", cmd_verify), ("abelianize", cmd_abelianize)):
        p = add(name, func, f"{name} a built-in presentation")
        p.add_argument("--presentation", required=True)
        p.add_argument("--n", type=int, default=1)
        p.add_argument("--printed", action="store_true", help="use the uncorrected lemma54 relator")
    p = add("relations", cmd_relations, "check the relation families as matrix identities", ctx=True)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--budget", type=int, default=4000)
    p = add("split", cmd_split, "amalgam split of lemma54")
    p.add_argument("--presentation", default="lemma54")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", help='JSON {"A": [...], "B": [...], "C": [...]} or [A, B, C]')
    add("classify-order", cmd_classify_order, "discretely normed / GE2-ring classification", ctx=True)
    p = add("units", cmd_units, "units of Gamma_n(Z)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="also list the units")
    add("counterexample-o5", cmd_counterexample_o5, "the O5 -> O2 relation counterexample")
    p = add("check-hom", cmd_check_hom, "check that a map kills every defining relator")
    p.add_argument("--spec", help="JSON hom spec")
    return ap


def _render(obj):
    if not isinstance(obj, dict):
        return json.dumps(obj)
    lines = []
    for k, v in obj.items():
        if isinstance(v, str) and "\n" in v:
            lines.append(f"{k}:")
            lines.extend("  " + line for line in v.splitlines())
        else:
            lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(v)}")
    return "\n".join(lines)


def _error(exc, kind):
    err = {"type": kind, "message": getattr(exc, "reason", str(exc))}
    if isinstance(exc, ParseError):
        err["offset"] = exc.offset
        err["text"] = exc.text
        if hasattr(exc, "entry"):
            err["entry"] = exc.entry
    return {"error": err}


def run(argv=None):
    """Run a command; returns (exit code, result dict)."""
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("no command given")
        random.seed(args.seed)
        return 0, args.func(args), args
    except UsageError as exc:
        return 2, _error(exc, "UsageError"), None
    except ParseError as exc:
        return 2, _error(exc, "ParseError"), None
    except HModularError as exc:
        return 1, _error(exc, type(exc).__name__), None
    except (ValueError, ArithmeticError, KeyError, TypeError) as exc:
        return 1, _error(exc, type(exc).__name__), None
    except OSError as exc:
        return 2, _error(exc, "IOError"), None


def main(argv=None):
    code, result, args = run(argv)
    as_json = args is None or args.json
    print(json.dumps(result, sort_keys=False) if as_json else _render(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
