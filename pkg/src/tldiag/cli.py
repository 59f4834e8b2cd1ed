"""Command-line front end.

Subcommands:

* ``expand``   -- parse a generator-word expression and print its expansion
* ``verify``   -- run identity suites, exit 0 iff everything holds
* ``spectrum`` -- eigenvalue report for a two-row path
* ``graph``    -- branching graph levels with content edge labels
* ``coeff``    -- closed-form coefficients of d_gamma / d_gamma^*
* ``repcheck`` -- exact-rational regular-representation report

Expression grammar (whitespace insignificant, ``*`` optional between
adjacent atoms)::

    expr   := term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' int)? | '(' expr ')' ('^' int)?
    atom   := e[i] | tau | T[i] | X[i] | m[i] | M[i] | d[parts] |
              dstar[parts] | q | x | qint[i] | integer

Exit codes: 0 success, 1 verification failure, 2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .scalars import IntLaurent, ParamScalar, qint, exact_divide, NonDivisibleError
from . import algebra as alg
from . import affine_diagram as aff
from . import verify as verify_mod
from . import spectra
from . import repcheck as rc
from .render import render_element, render_scalar
from .shapes import (
    Partition, SkewShape, TLPath, standard_tableaux, tl_level_vertices,
    hecke_level_vertices, content,
)

_Q = IntLaurent.q_power
_QMQ = IntLaurent({1: 1, -1: -1})


class SyntaxErrorWithColumn(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


# ---------------------------------------------------------------------------
# Lexer / parser

_SYMBOLS = set("+-*^()[],")


def tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch in _SYMBOLS:
            tokens.append(("sym", ch, col))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), col))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], col))
            i = j
        else:
            raise SyntaxErrorWithColumn(f"unexpected character {ch!r}", col)
    tokens.append(("end", None, len(text) + 1))
    return tokens


_KNOWN_NAMES = {"e", "tau", "T", "X", "m", "M", "d", "dstar", "q", "x", "qint"}


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, col = self.next()
        if kind != "sym" or val != value:
            raise SyntaxErrorWithColumn(f"expected {value!r}", col)

    def parse(self):
        node = self.expr()
        kind, _val, col = self.peek()
        if kind != "end":
            raise SyntaxErrorWithColumn("trailing input", col)
        return node

    def expr(self):
        terms = [(1, self.term())]
        while True:
            kind, val, _col = self.peek()
            if kind == "sym" and val in "+-":
                self.next()
                terms.append((1 if val == "+" else -1, self.term()))
            else:
                return ("sum", terms)

    def term(self):
        factors = [self.factor()]
        while True:
            kind, val, _col = self.peek()
            if kind == "sym" and val == "*":
                self.next()
                factors.append(self.factor())
            elif kind in ("name", "int") or (kind == "sym" and val == "("):
                factors.append(self.factor())
            else:
                return ("product", factors)

    def factor(self):
        kind, val, col = self.peek()
        if kind == "sym" and val == "(":
            self.next()
            inner = self.expr()
            self.expect(")")
            base = inner
        else:
            base = self.atom()
        kind, val, _col = self.peek()
        if kind == "sym" and val == "^":
            self.next()
            sign = 1
            kind, val, col = self.next()
            if kind == "sym" and val == "-":
                sign = -1
                kind, val, col = self.next()
            if kind != "int":
                raise SyntaxErrorWithColumn("expected an integer exponent", col)
            return ("power", base, sign * val)
        return base

    def atom(self):
        kind, val, col = self.next()
        if kind == "int":
            return ("int", val)
        if kind != "name":
            raise SyntaxErrorWithColumn("expected an atom", col)
        if val not in _KNOWN_NAMES:
            raise SyntaxErrorWithColumn(f"unknown symbol {val!r}", col)
        if val in ("q", "x", "tau"):
            return (val,)
        kind2, val2, col2 = self.peek()
        if kind2 != "sym" or val2 != "[":
            raise SyntaxErrorWithColumn(f"{val} needs a bracketed index", col2)
        self.next()
        indices = []
        while True:
            kind3, val3, col3 = self.next()
            if kind3 != "int":
                raise SyntaxErrorWithColumn("expected an index", col3)
            indices.append(val3)
            kind4, val4, col4 = self.next()
            if kind4 == "sym" and val4 == ",":
                continue
            if kind4 == "sym" and val4 == "]":
                break
            raise SyntaxErrorWithColumn("expected ',' or ']'", col4)
        if val in ("d", "dstar"):
            return (val, tuple(indices))
        if len(indices) != 1:
            raise SyntaxErrorWithColumn(f"{val} takes one index", col)
        return (val, indices[0])


def parse(text: str):
    """Parse an expression into an AST (see the module grammar)."""
    return Parser(text).parse()


# ---------------------------------------------------------------------------
# AST evaluation

class EvalContext:
    def __init__(self, k: int, ring: str, via: str = "def", style: str = "pole"):
        self.k = k
        self.ring = ring
        self.via = via
        self.style = style

    def unit(self):
        return alg.AlgebraElement.unit(self.ring, self.k)

    def jm(self, i: int):
        if self.via == "def":
            return alg.jm_definition(i, self.k, self.style)
        if self.via == "rec":
            return alg.jm_recursion(i, self.k, self.style)
        if self.via == "closed":
            return alg.jm_closed_form(i, self.k)
        raise ValueError(f"unknown construction {self.via!r}")


def evaluate_ast(node, ctx: EvalContext):
    kind = node[0]
    if kind == "sum":
        total = alg.AlgebraElement.zero(ctx.ring, ctx.k)
        for sign, term in node[1]:
            value = evaluate_ast(term, ctx)
            total = total + (value if sign > 0 else -value)
        return total
    if kind == "product":
        result = ctx.unit()
        for factor in node[1]:
            result = result * evaluate_ast(factor, ctx)
        return result
    if kind == "power":
        base = evaluate_ast(node[1], ctx)
        n = node[2]
        if n < 0:
            inverse = _try_invert_atom(node[1], ctx)
            if inverse is None:
                raise ValueError("negative powers are supported for q, tau, T, X only")
            return inverse ** (-n)
        return base ** n
    if kind == "int":
        return ctx.unit().scale(node[1])
    if kind == "q":
        return ctx.unit().scale(_Q(1))
    if kind == "x":
        if ctx.ring == alg.AFFINE:
            return ctx.unit().scale(ParamScalar.x(1))
        return ctx.unit().scale(IntLaurent({1: 1, -1: 1}))
    if kind == "qint":
        return ctx.unit().scale(qint(node[1]))
    if kind == "tau":
        if ctx.ring != alg.AFFINE:
            raise ValueError("tau requires --ring affine")
        return alg.affine_element(ctx.k, aff.gen_tau(ctx.k))
    if kind == "e":
        return alg.evaluate([("e", node[1])], ctx.k, ctx.ring)
    if kind == "T":
        return alg.evaluate([("T", node[1])], ctx.k, ctx.ring)
    if kind == "X":
        if ctx.ring == alg.AFFINE:
            return alg.x_element(node[1], ctx.k, False, ctx.style)
        return alg.evaluate([("X", node[1])], ctx.k, ctx.ring)
    if kind == "M":
        return ctx.jm(node[1])
    if kind == "m":
        if ctx.ring == alg.FINITE:
            if node[1] == 1:
                raise ValueError(
                    "m[1] is the non-integral scalar q^-1/(q - q^-1); "
                    "use M[1] or the coeff subcommand")
            return alg.psi_finite(node[1], ctx.k)
        mi = ctx.jm(node[1])
        try:
            return alg.AlgebraElement(alg.AFFINE, ctx.k, {
                d: c.divide_laurent(_QMQ) for d, c in mi.support.items()})
        except NonDivisibleError:
            raise ValueError(
                f"m[{node[1]}] is not integral in the affine ring; use M[{node[1]}]")
    if kind == "d":
        return alg.d_gamma_element(node[1], ctx.k)
    if kind == "dstar":
        if ctx.ring != alg.AFFINE:
            raise ValueError("dstar requires --ring affine")
        return alg.d_gamma_star_element(node[1], ctx.k)
    raise ValueError(f"cannot evaluate node {node!r}")


def _try_invert_atom(node, ctx: EvalContext):
    kind = node[0]
    if kind == "q":
        return ctx.unit().scale(_Q(-1))
    if kind == "tau":
        if ctx.ring != alg.AFFINE:
            raise ValueError("tau requires --ring affine")
        return alg.affine_element(ctx.k, aff.gen_tau_inv(ctx.k))
    if kind == "T":
        return alg.evaluate([("T_inv", node[1])], ctx.k, ctx.ring)
    if kind == "X":
        if ctx.ring == alg.AFFINE:
            return alg.x_element(node[1], ctx.k, True, ctx.style)
        return alg.evaluate([("X_inv", node[1])], ctx.k, ctx.ring)
    return None


# ---------------------------------------------------------------------------
# Subcommands

def _emit(payload, fmt: str, text_fn):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text_fn())


def cmd_expand(args) -> int:
    ctx = EvalContext(args.k, args.ring, args.via, args.style)
    try:
        ast = parse(args.expr)
        elem = evaluate_ast(ast, ctx)
    except (SyntaxErrorWithColumn, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"schema": 1, "k": args.k, "ring": args.ring,
               "expr": args.expr, "element": elem.to_json()}
    _emit(payload, args.format, lambda: render_element(elem))
    return 0


def cmd_verify(args) -> int:
    report = verify_mod.run_suites([args.suite], kmax=args.kmax)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for record in report["checks"]:
            mark = "ok " if record["ok"] else "FAIL"
            detail = f"  ({record['detail']})" if record.get("detail") else ""
            print(f"[{mark}] {record['suite']}: {record['name']}{detail}")
        print(f"{report['passed']} passed, {report['failed']} failed")
        if report["first_failure"] is not None:
            print("first failure:", json.dumps(report["first_failure"], sort_keys=True))
    return 0 if report["ok"] else 1


def cmd_spectrum(args) -> int:
    try:
        steps = tuple(int(s) for s in args.p.split(","))
        path = TLPath(steps)
        reports = []
        indices = [args.i] if args.i is not None else list(range(2, path.length() + 1))
        for i in indices:
            reports.append(spectra.reconcile(path, i, args.m))
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"schema": 1, "path": list(path.steps), "m": args.m,
               "reports": [r.to_json() for r in reports]}

    def text():
        lines = []
        for r in reports:
            flags = ", ".join(f"{k}={v}" for k, v in r.match_flags.items())
            lines.append(
                f"i={r.i}: derived ({r.derived})  statement-literal ({r.theorem_plus})"
                f"  statement-negated ({r.theorem_minus})"
                f"  proof-form ({r.proof_form})  [{flags}]")
        return "\n".join(lines)

    _emit(payload, args.format, text)
    if args.strict and any(
            not (r.match_flags["theorem_plus_matches"] or r.derived.is_zero())
            for r in reports):
        return 1
    return 0


def cmd_graph(args) -> int:
    mu_parts = tuple(int(p) for p in args.mu.split(",")) if args.mu else ()
    mu = Partition(mu_parts)
    payload = {"schema": 1, "mu": list(mu.parts), "type": args.type, "levels": []}
    lines = []
    if args.type == "tl":
        start = mu.row(1) - mu.row(2)
        for level in range(args.levels + 1):
            labels = tl_level_vertices(start, level)
            payload["levels"].append({"level": level, "vertices": labels})
            lines.append(f"level {level}: " + " ".join(map(str, labels)))
    else:
        nrows = args.nrows
        prev = None
        for level in range(args.levels + 1):
            shapes = hecke_level_vertices(mu_parts, level, nrows)
            entry = {"level": level, "vertices": [str(s.outer) for s in shapes],
                     "edges": []}
            text_edges = []
            if prev is not None:
                for shape in shapes:
                    for p in prev:
                        if (shape.outer.size() - p.outer.size() == 1
                                and shape.outer.contains(p.outer)):
                            box = next(b for b in shape.outer.boxes()
                                       if b not in p.outer.boxes())
                            entry["edges"].append(
                                {"from": str(p.outer), "to": str(shape.outer),
                                 "content": content(box)})
                            text_edges.append(
                                f"{p.outer} ->({content(box)}) {shape.outer}")
            payload["levels"].append(entry)
            lines.append(f"level {level}: " + " | ".join(str(s.outer) for s in shapes))
            lines.extend("  " + e for e in text_edges)
            prev = shapes
    _emit(payload, args.format, lambda: "\n".join(lines))
    return 0


def cmd_coeff(args) -> int:
    gamma = tuple(int(p) for p in args.gamma.split(","))
    try:
        nonstar, star = alg.closed_form_coeff(args.i, gamma)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"schema": 1, "i": args.i, "gamma": list(gamma),
               "nonstar": nonstar.to_json(), "star": star.to_json()}
    _emit(payload, args.format,
          lambda: f"nonstar {render_scalar(nonstar)}\nstar {render_scalar(star)}")
    return 0


def cmd_repcheck(args) -> int:
    try:
        if "/" in args.q:
            num, den = args.q.split("/")
            q_val = Fraction(int(num), int(den))
        else:
            q_val = Fraction(int(args.q))
        indices = [args.i] if args.i is not None else None
        report = rc.repcheck_report(args.k, q_val, indices)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format, lambda: json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["annihilated"] and report["commuting"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tldiag",
        description="Exact Temperley-Lieb diagram calculus and verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an expression in the diagram basis")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ring", choices=["finite", "affine"], default="finite")
    p.add_argument("--expr", required=True)
    p.add_argument("--via", choices=["def", "rec", "closed"], default="def",
                   help="construction used for m[i]/M[i] atoms")
    p.add_argument("--style", choices=["pole", "word"], default="pole",
                   help="evaluation style for affine X atoms")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("verify", help="run identity verification suites")
    p.add_argument("--suite", default="all",
                   choices=["all", *verify_mod.SUITES])
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("spectrum", help="eigenvalue report for a two-row path")
    p.add_argument("--p", required=True, help="comma list of path labels")
    p.add_argument("--m", type=int, required=True, help="size of mu")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--strict", action="store_true",
                   help="exit 1 when the derived value differs from the "
                        "printed statement (mismatch is expected)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("graph", help="branching graph levels")
    p.add_argument("--mu", default="", help="comma list, e.g. 4,2")
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--type", choices=["hecke", "tl"], default="tl")
    p.add_argument("--nrows", type=int, default=2)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("coeff", help="closed-form coefficients for a class")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--gamma", required=True, help="comma list, e.g. 2,1,2")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_coeff)

    p = sub.add_parser("repcheck", help="regular representation spectra check")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", required=True, help="rational, e.g. 2 or 5/3")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(fn=cmd_repcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
