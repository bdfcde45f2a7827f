"""Command-line driver.

Exit codes: 0 when the checked property holds (or every scenario passes),
1 when it fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import glob
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog
from .algebra import (
    FiniteAlgebra, check_axioms, contractivity_index, is_involutive, is_smtl,
    is_well_connected, make_algebra,
)
from .constructions import ordinal_sum, product, quotient, subalgebra_generated
from .enumeration import census, chains_upto, naive_chain_tables
from .errors import MTLError
from .filters import all_filters, generated_filter, is_simple, is_subdirectly_irreducible
from .formula import parse, show
from .modeltheory import find_amalgam, find_embeddings, find_joint_embedding
from .relations import NODES, default_graph
from .scenarios import SCENARIOS, run_all, run_scenario
from .semantics import (
    DEFAULT_BUDGET, consequence, find_interpolant, is_tautology, local_deduction_check,
)

HOLDS, FAILS, ERROR = 0, 1, 2


def _witness(w: Optional[dict]) -> str:
    return "{" + ", ".join(f"{k}={v}" for k, v in (w or {}).items()) + "}"


def _elements(xs: Sequence[int]) -> str:
    return "[" + ", ".join(str(x) for x in xs) + "]"


def _emit_algebra(A: FiniteAlgebra, args, extra: Sequence[str] = ()) -> None:
    """Print A in the algebra file format, or save it under --out."""
    text = catalog.dumps(A) + "".join(f"# {line}\n" for line in extra)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        path = out / f"{_safe(A.name or 'algebra')}.alg"
        path.write_text(text)
        print(f"wrote {path}")
    else:
        sys.stdout.write(text)


def _safe(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_+." else "_" for c in name)


def _targets(args) -> list[FiniteAlgebra]:
    found: list[FiniteAlgebra] = []
    for pattern in args.targets or ():
        paths = sorted(glob.glob(pattern))
        if paths:
            found.extend(catalog.load(p) for p in paths)
        else:
            found.append(catalog.resolve(pattern))
    if args.enum_upto:
        found.extend(chains_upto(args.enum_upto))
    if not found:
        raise MTLError("no target algebras: give --targets or --enum-upto")
    return found


# ----------------------------------------------------------- commands

def cmd_check(args) -> int:
    status = HOLDS
    for ref in args.algebras:
        path = Path(ref)
        if path.is_file():
            A = catalog.loads(path.read_text(), check=False)
        else:
            A = catalog.resolve(ref)
        report = check_axioms(A)
        print(f"== {A.name or ref} (n={A.n})")
        for line in report.lines():
            print(line)
        chain = bool((A.leq | A.leq.T).all())
        print(f"FL_ew\t{'yes' if report.fl_ew else 'no'}")
        print(f"MTL\t{'yes' if report.mtl else 'no'}")
        print(f"chain\t{'yes' if chain else 'no'}")
        if report.mtl:
            A = make_algebra(A.mult, leq=None if chain else A.leq, name=A.name)
            print(f"well-connected\t{'yes' if is_well_connected(A) else 'no'}")
            print(f"contractivity\t{contractivity_index(A)}")
            print(f"smtl\t{'yes' if is_smtl(A) else 'no'}")
            print(f"involutive\t{'yes' if is_involutive(A) else 'no'}")
        else:
            status = FAILS
    return status


def cmd_taut(args) -> int:
    A = catalog.resolve(args.algebra)
    res = is_tautology(A, parse(args.formula), args.budget)
    print("holds" if res else f"fails: countermodel {_witness(res.witness)}")
    return HOLDS if res else FAILS


def cmd_conseq(args) -> int:
    A = catalog.resolve(args.algebra)
    res = consequence(A, [parse(p) for p in args.premise], parse(args.goal), args.budget)
    print("holds" if res else f"fails: countermodel {_witness(res.witness)}")
    return HOLDS if res else FAILS


def cmd_ldt(args) -> int:
    A = catalog.resolve(args.algebra)
    res = local_deduction_check(A, [parse(p) for p in args.premise], parse(args.psi),
                                parse(args.goal), args.budget)
    left = "holds" if res.holds_left else f"fails: countermodel {_witness(res.witness)}"
    print(f"premises + psi |= goal: {left}")
    print(f"minimal n: {res.minimal_n if res.minimal_n is not None else 'none'}")
    print(f"agrees with local deduction: {'yes' if res.agrees else 'NO'}")
    return HOLDS if res.holds_left and res.agrees else FAILS


def cmd_interp(args) -> int:
    A = catalog.resolve(args.algebra)
    g = find_interpolant(A, parse(args.phi), parse(args.psi), args.depth, n=args.n,
                         implicative=args.implicative, budget=args.budget)
    if g is None:
        print(f"not found up to depth {args.depth}")
        return FAILS
    print(show(g, full=False))
    return HOLDS


def cmd_filters(args) -> int:
    A = catalog.resolve(args.algebra)
    for F in all_filters(A):
        print(_elements(F.elements))
    return HOLDS


def cmd_si(args) -> int:
    A = catalog.resolve(args.algebra)
    si, mono = is_subdirectly_irreducible(A)
    print(f"subdirectly irreducible: {'yes' if si else 'no'}")
    print(f"monolith: {_elements(mono.elements) if mono is not None else 'none'}")
    print(f"simple: {'yes' if si and is_simple(A) else 'no'}")
    return HOLDS if si else FAILS


def cmd_product(args) -> int:
    _emit_algebra(product(catalog.resolve(args.left), catalog.resolve(args.right)), args)
    return HOLDS


def cmd_osum(args) -> int:
    _emit_algebra(ordinal_sum(catalog.resolve(args.lower), catalog.resolve(args.upper)), args)
    return HOLDS


def cmd_subalg(args) -> int:
    A = catalog.resolve(args.algebra)
    sub, inc = subalgebra_generated(A, args.gens)
    _emit_algebra(sub, args, [f"inclusion: {' '.join(map(str, inc.map))}"])
    return HOLDS


def cmd_quotient(args) -> int:
    A = catalog.resolve(args.algebra)
    F = generated_filter(A, args.gens)
    Q, proj = quotient(A, F)
    _emit_algebra(Q, args, [f"filter: {' '.join(map(str, F.elements))}",
                            f"projection: {' '.join(map(str, proj.map))}"])
    return HOLDS


def cmd_embed(args) -> int:
    A, C = catalog.resolve(args.source), catalog.resolve(args.target)
    embs = find_embeddings(A, C)
    for f in embs:
        print(_elements(f.map))
    if not embs:
        print("no embedding")
    return HOLDS if embs else FAILS


def cmd_jointembed(args) -> int:
    A, B = catalog.resolve(args.left), catalog.resolve(args.right)
    targets = _targets(args)
    res = find_joint_embedding(A, B, targets, parallel=args.parallel)
    if res is None:
        print(f"no joint embedding among {len(targets)} targets")
        return FAILS
    C, f, g = res
    print(f"target: {C.name}")
    print(f"{A.name or 'A'}: {_elements(f.map)}")
    print(f"{B.name or 'B'}: {_elements(g.map)}")
    return HOLDS


def cmd_amalgam(args) -> int:
    span = catalog.load_span(args.span)
    targets = _targets(args)
    res = find_amalgam(span, targets)
    if res is None:
        print(f"no amalgam among {len(targets)} targets")
        return FAILS
    D, h, k = res
    print(f"target: {D.name}")
    print(f"h: {_elements(h.map)}")
    print(f"k: {_elements(k.map)}")
    return HOLDS


def cmd_enum(args) -> int:
    cen = census(args.n)
    if args.oracle:
        naive = sum(1 for _ in naive_chain_tables(args.n))
        print(f"# generator {cen.count}, oracle {naive}")
        if naive != cen.count:
            return FAILS
    if args.out:
        written = catalog.write_census(cen, args.out)
        from .report import plot_census
        fig = plot_census(cen, Path(args.out) / f"census_{args.n}.png")
        print(f"wrote {len(written) - 1} algebras, {written[-1]} and {fig}")
        return HOLDS
    print("\t".join(catalog.TSV_COLUMNS))
    for ident, m in zip(cen.ids(), cen.meta):
        print(f"{ident}\t{m.contractivity}\t{int(m.smtl)}\t{int(m.involutive)}\t{int(m.simple)}")
    return HOLDS


def cmd_scenario(args) -> int:
    if args.list:
        for sc in SCENARIOS.values():
            print(f"{sc.id}\t{sc.description}")
        return HOLDS
    if args.all:
        verdicts = run_all(parallel=args.parallel)
    elif args.id:
        verdicts = [run_scenario(args.id)]
    else:
        raise MTLError("give a scenario id, --all or --list")
    for vd in verdicts:
        sys.stdout.write(vd.render())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        with (out / "scenarios.tsv").open("w") as fh:
            fh.write("id\tverdict\tfacts\n")
            for vd in verdicts:
                facts = sum(1 for line in vd.transcript if line.startswith("["))
                fh.write(f"{vd.scenario}\t{'PASS' if vd.passed else 'FAIL'}\t{facts}\n")
        for vd in verdicts:
            (out / f"{vd.scenario}.txt").write_text(vd.render())
        from .report import plot_verdicts
        plot_verdicts(verdicts, out / "scenarios.png")
    return HOLDS if all(vd.passed for vd in verdicts) else FAILS


def cmd_relations(args) -> int:
    graph = default_graph()
    status = HOLDS
    if args.pair:
        if len(args.pair) != 2:
            raise MTLError("give exactly two properties or none")
        p, q = args.pair
        print(f"{p} {q}: {graph.relation(p, q)}")
        for e in graph.between(p, q):
            print(e.line())
    elif not args.check_consistency:
        for e in graph.edges:
            print(e.line())
    if args.check_consistency:
        bad = graph.inconsistencies()
        for p, q in bad:
            print(f"inconsistent: {p} -/-> {q} contradicts an implication path")
        print(f"consistency: {'ok' if not bad else 'FAILED'}")
        status = HOLDS if not bad else FAILS
    if args.figure:
        from .report import plot_relations
        print(f"wrote {plot_relations(graph, args.figure)}")
    return status


def cmd_list(args) -> int:
    for path, A in catalog.list_catalog(args.directory):
        kind = "chain" if A.chain else "poset"
        print(f"{path.name}\t{A.name}\t{A.n}\t{kind}")
    return HOLDS


# ----------------------------------------------------------- parser

def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--budget", type=int, default=argparse.SUPPRESS, metavar="EVALS",
                   help=f"assignment budget for semantic sweeps (default {DEFAULT_BUDGET})")
    p.add_argument("--out", default=argparse.SUPPRESS, metavar="DIR",
                   help="write results into DIR instead of stdout")
    p.add_argument("--parallel", action="store_true", default=argparse.SUPPRESS,
                   help="fan out independent work over processes")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="mtlkit", parents=[common],
                                     description="Finite-model workbench for MTL.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "verify the laws of algebra files")
    p.add_argument("algebras", nargs="+", metavar="ALGEBRA")

    p = add("taut", cmd_taut, "is a formula a tautology of the algebra")
    p.add_argument("-a", "--algebra", required=True)
    p.add_argument("formula")

    p = add("conseq", cmd_conseq, "semantic consequence on one algebra")
    p.add_argument("-a", "--algebra", required=True)
    p.add_argument("-p", "--premise", action="append", default=[])
    p.add_argument("goal")

    p = add("ldt", cmd_ldt, "local deduction check")
    p.add_argument("-a", "--algebra", required=True)
    p.add_argument("-p", "--premise", action="append", default=[])
    p.add_argument("--psi", required=True)
    p.add_argument("goal")

    p = add("interp", cmd_interp, "search for an interpolant")
    p.add_argument("-a", "--algebra", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("-n", type=int, default=1, help="power used by the weak form")
    p.add_argument("--implicative", action="store_true",
                   help="require phi^n -> gamma and gamma^n -> psi to be tautologies")

    p = add("filters", cmd_filters, "list every filter")
    p.add_argument("algebra")

    p = add("si", cmd_si, "subdirect irreducibility and monolith")
    p.add_argument("algebra")

    p = add("product", cmd_product, "direct product of two algebras")
    p.add_argument("left")
    p.add_argument("right")

    p = add("osum", cmd_osum, "ordinal sum of two chains")
    p.add_argument("lower")
    p.add_argument("upper")

    p = add("subalg", cmd_subalg, "subalgebra generated by elements")
    p.add_argument("algebra")
    p.add_argument("gens", nargs="*", type=int)

    p = add("quotient", cmd_quotient, "quotient by the filter generated by elements")
    p.add_argument("algebra")
    p.add_argument("gens", nargs="*", type=int)

    p = add("embed", cmd_embed, "all embeddings of one algebra into another")
    p.add_argument("-a", "--source", required=True)
    p.add_argument("-b", "--target", required=True)

    for name, func, help_text in (
        ("jointembed", cmd_jointembed, "joint embedding into a target"),
        ("amalgam", cmd_amalgam, "amalgam of a span in a target"),
    ):
        p = add(name, func, help_text)
        if name == "jointembed":
            p.add_argument("-a", "--left", required=True)
            p.add_argument("-b", "--right", required=True)
        else:
            p.add_argument("--span", required=True)
        p.add_argument("--targets", nargs="+", metavar="GLOB|NAME")
        p.add_argument("--enum-upto", type=int, metavar="N")

    p = add("enum", cmd_enum, "census of MTL-chains of one order")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check the count against the naive enumerator")

    p = add("scenario", cmd_scenario, "run replication scenarios")
    p.add_argument("id", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true")

    p = add("relations", cmd_relations, "query the property-relations graph")
    p.add_argument("pair", nargs="*", metavar="P", help=f"two of {', '.join(NODES)}")
    p.add_argument("--check-consistency", action="store_true")
    p.add_argument("--figure", metavar="PNG")

    p = add("list", cmd_list, "list the algebra files in a directory")
    p.add_argument("directory")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag, default in (("budget", DEFAULT_BUDGET), ("out", None), ("parallel", False)):
        if not hasattr(args, flag):
            setattr(args, flag, default)
    try:
        return args.func(args)
    except (MTLError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
