"""Command line entry point.

Operator arguments are a catalog name or a JSON operator file.  Poly-vector
arguments are an ultralocal or catalog name, a file, or an expression.
Exit status is 0 exactly when every requested check passes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as cat
from .acceptance import run_acceptance
from .ansatz import monomial_basis, solve_trivialization, trivialize_bivector
from .cohomology import reduce_closed
from .errors import DpvaError
from .functional import LocalPolyVector, integral
from .operators import MatDiffOp, is_skewadjoint, op_to_bivector
from .parse import default_names, parse, to_str
from .pva import bracket_master, check_jacobi, check_order11_conditions
from .schouten import are_compatible, characteristics, is_poisson, schouten_bracket


def load_op(arg: str) -> MatDiffOp:
    path = Path(arg)
    if path.is_file():
        return MatDiffOp.from_json(path.read_text())
    return cat.get(arg).op


def load_pv(arg: str) -> LocalPolyVector:
    """A poly-vector: ultralocal name, catalog operator (as bivector), file or expression."""
    if arg in cat.ULTRALOCAL:
        return cat.ULTRALOCAL[arg]
    if arg in cat.CATALOG:
        return op_to_bivector(cat.CATALOG[arg].op)
    path = Path(arg)
    if path.is_file():
        text = path.read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            return integral(parse(text))
        return integral(parse(data["density"], data.get("components", ("u", "v"))))
    return integral(parse(arg))


def _window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("window must look like a..b")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError("empty window")
    return lo_i, hi_i


def _default_ul(base: str, target: str) -> LocalPolyVector:
    for t in cat.TRIVIALIZATIONS.values():
        if (t.base, t.target) == (base, target):
            return cat.ULTRALOCAL[t.ul]
    return cat.ULTRALOCAL["ul.p0"]


def _verdict(label: str, ok: bool) -> int:
    print(f"{label}: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


# verbs ---------------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in cat.names():
            e = cat.CATALOG[name]
            flag = "hamiltonian" if e.hamiltonian else "-"
            print(f"{name:16s} {flag:12s} {e.note}")
        return 0
    if not args.name:
        print("catalog show needs a name", file=sys.stderr)
        return 2
    e = cat.get(args.name)
    if args.json:
        print(json.dumps(e.op.to_json(), indent=2))
    else:
        print(e.op.to_str())
    return 0


def cmd_check(args) -> int:
    K = load_op(args.op)
    if args.kind == "skew":
        return _verdict("skewadjoint", is_skewadjoint(K))
    if args.fast11:
        v = check_order11_conditions(*K.order11_parts())
    else:
        v = check_jacobi(K)
    if not v.passed:
        print(f"witness: {v.witness}" + (f" ({v.condition})" if v.condition else ""))
        for r in v.residuals:
            print(f"residual: {to_str(r, K.names)}")
    return _verdict("jacobi", v.passed)


def cmd_bracket(args) -> int:
    K = load_op(args.op)
    f, g = parse(args.f, K.names), parse(args.g, K.names)
    lines = bracket_master(K, f, g).lines(K.names)
    print("\n".join(lines) if lines else "0")
    return 0


def cmd_schouten(args) -> int:
    print(schouten_bracket(load_pv(args.a), load_pv(args.b)))
    return 0


def cmd_compat(args) -> int:
    P, Q = op_to_bivector(load_op(args.a)), op_to_bivector(load_op(args.b))
    return _verdict("compatible", are_compatible(P, Q))


def cmd_poisson(args) -> int:
    return _verdict("poisson", is_poisson(op_to_bivector(load_op(args.op))))


def cmd_reduce(args) -> int:
    r = reduce_closed(parse(args.expr))
    print(f"primitive: {to_str(r.primitive)}")
    print(f"rep: {to_str(r.rep)}")
    return 0


def _report(sol, arity: int) -> int:
    if sol is None:
        print("no solution")
        return 1
    print(f"alpha: {sol.alpha}" + ("" if sol.alpha_determined else " (not determined)"))
    for name, c in zip(default_names(arity), characteristics(sol.X)):
        print(f"X[{name}]: {to_str(c)}")
    print(f"nullity: {sol.nullity}")
    return 0


def _ul_arg(args) -> LocalPolyVector | None:
    if args.no_ul:
        return None
    return load_pv(args.ul) if args.ul else _default_ul(args.base, args.target)


def cmd_trivialize(args) -> int:
    P, T = load_pv(args.base), load_pv(args.target)
    sol = trivialize_bivector(P, T, _ul_arg(args), args.window, args.maxdeg)
    return _report(sol, P.arity)


def cmd_solve(args) -> int:
    P, T = load_pv(args.base), load_pv(args.target)
    basis = monomial_basis(P.arity, args.window, args.maxdeg, args.laurent)
    return _report(solve_trivialization(P, T, basis, _ul_arg(args)), P.arity)


def cmd_accept(args) -> int:
    results = run_acceptance(args.filter)
    for r in results:
        print(r.line())
    if not results:
        print(f"no criterion matches {args.filter!r}", file=sys.stderr)
        return 2
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dpva", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("catalog", help="list or show built-in operators")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true", help="show as an operator file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("check", help="skewadjointness or Jacobi identity")
    p.add_argument("kind", choices=("skew", "ham"))
    p.add_argument("op")
    p.add_argument("--fast11", action="store_true", help="order (-1,1) conditions instead of full Jacobi")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bracket", help="lambda-bracket of two polynomials")
    p.add_argument("op")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("schouten", help="Schouten bracket of two poly-vectors")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_schouten)

    p = sub.add_parser("compat", help="compatibility of two operators")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("poisson", help="[P, P] = 0 for an operator")
    p.add_argument("op")
    p.set_defaults(func=cmd_poisson)

    p = sub.add_parser("reduce", help="reduce a closed density to a representative")
    p.add_argument("expr")
    p.set_defaults(func=cmd_reduce)

    for verb, fn in (("trivialize", cmd_trivialize), ("solve", cmd_solve)):
        p = sub.add_parser(verb, help="solve target = alpha ul + [base, X]")
        p.add_argument("--base", required=True)
        p.add_argument("--target", required=True)
        p.add_argument("--ul")
        p.add_argument("--no-ul", action="store_true")
        p.add_argument("--window", type=_window, default=(0, 0))
        p.add_argument("--maxdeg", type=int, default=2)
        if verb == "solve":
            p.add_argument("--laurent", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("accept", help="run the acceptance suite")
    p.add_argument("--filter", help="criterion tag or number")
    p.set_defaults(func=cmd_accept)
    return ap


def _join_window(argv: list[str]) -> list[str]:
    # "-1..1" looks like an option to argparse
    out: list[str] = []
    it = iter(argv)
    for a in it:
        out.append(f"{a}={next(it, '')}" if a == "--window" else a)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_join_window(argv))
    try:
        return args.func(args)
    except DpvaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
