"""Command line front end.

Exit codes: 0 true/success, 1 false/absent, 2 input error, 3 budget
exhausted, 4 disagreement with the oracle under ``--oracle``.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle
from .complex import (ComplexError, bouquet, complex_of_automaton, immersion, immersions,
                      is_covering)
from .core import ParseError, Presentation, group_image
from .graph import GraphError, iso_rooted
from .io import LoadError, export_dot, from_json, parse_presentation, to_json
from .order import conjugator
from .stephen import (DEFAULT_BUDGET, BudgetExhausted, coset_automaton, flower,
                      linear_automaton, schutzenberger)

TRUE, FALSE, INPUT_ERROR, BUDGET, DISAGREE = 0, 1, 2, 3, 4


class OracleDisagreement(RuntimeError):
    pass


def _pres(args) -> Presentation:
    return parse_presentation(Path(args.pres).read_text())


def _write(path: str | None, text: str) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _check(args, label: str, ours, theirs) -> None:
    if ours != theirs:
        raise OracleDisagreement(f"{label}: engine says {ours}, oracle says {theirs}")
    print(f"oracle: {label} agrees", file=sys.stderr)


def _generic_coset(ys, pres, budget):
    return oracle.generic_saturate(flower(pres.parse_words(ys), pres), budget).unwrap()


def _emit_automaton(args, a) -> None:
    print(a)
    _write(args.dot, export_dot(a))
    _write(args.json, to_json(a))


def cmd_coset(args) -> int:
    pres = _pres(args)
    report = coset_automaton(args.gens, pres, args.budget)
    a = report.unwrap()
    print(f"expansions: {report.expansions_applied}  folds: {report.folds_applied}")
    if args.oracle:
        _check(args, "coset automaton", True, iso_rooted(a, _generic_coset(args.gens, pres, args.budget)))
    _emit_automaton(args, a)
    return TRUE


def cmd_schutz(args) -> int:
    pres = _pres(args)
    w = pres.parse_word(args.word)
    report = schutzenberger(w, pres, args.budget)
    a = report.unwrap()
    print(f"expansions: {report.expansions_applied}  folds: {report.folds_applied}")
    if args.oracle:
        ref = oracle.generic_saturate(linear_automaton(w, pres), args.budget).unwrap()
        _check(args, "Schutzenberger automaton", True, iso_rooted(a, ref))
    _emit_automaton(args, a)
    return TRUE


def _leq(u, w, pres, budget, use_oracle):
    ours = schutzenberger(u, pres, budget).unwrap().member(w)
    if use_oracle:
        theirs = oracle.generic_leq(u, w, pres, budget)
        if ours != theirs:
            raise OracleDisagreement(f"{u} <= {w}: engine says {ours}, oracle says {theirs}")
    return ours


def cmd_leq(args) -> int:
    pres = _pres(args)
    u, w = pres.parse_word(args.u), pres.parse_word(args.word)
    result = _leq(u, w, pres, args.budget, args.oracle)
    print("true" if result else "false")
    return TRUE if result else FALSE


def cmd_eq(args) -> int:
    pres = _pres(args)
    u, w = pres.parse_word(args.u), pres.parse_word(args.word)
    result = _leq(u, w, pres, args.budget, args.oracle) and _leq(w, u, pres, args.budget, args.oracle)
    print("true" if result else "false")
    return TRUE if result else FALSE


def cmd_member(args) -> int:
    pres = _pres(args)
    w = pres.parse_word(args.word)
    result = coset_automaton(args.gens, pres, args.budget).unwrap().member(w)
    if args.oracle:
        _check(args, "membership", result, _generic_coset(args.gens, pres, args.budget).member(w))
    print("true" if result else "false")
    return TRUE if result else FALSE


def cmd_conjugate(args) -> int:
    pres = _pres(args)
    a1 = coset_automaton(args.g1, pres, args.budget).unwrap()
    a2 = coset_automaton(args.g2, pres, args.budget).unwrap()
    m = conjugator(a1, a2)
    if args.oracle:
        ref = conjugator(_generic_coset(args.g1, pres, args.budget),
                         _generic_coset(args.g2, pres, args.budget))
        _check(args, "conjugacy", m is not None, ref is not None)
    if m is None:
        print("not conjugate")
        return FALSE
    print(m)
    return TRUE


def cmd_complex(args) -> int:
    pres = _pres(args)
    a = coset_automaton(args.gens, pres, args.budget).unwrap()
    if args.oracle:
        _check(args, "coset automaton", True, iso_rooted(a, _generic_coset(args.gens, pres, args.budget)))
    c = complex_of_automaton(a)
    _write(args.dot, export_dot(c))
    _write(args.json if args.json else "-", to_json(c) + "\n")
    return TRUE


def _load_complex(path: str, pres: Presentation | None):
    c = from_json(Path(path).read_text())
    if not hasattr(c, "two_cells"):
        raise LoadError(f"{path} holds an automaton, expected a complex")
    if pres is not None and c.pres.alphabet != pres.alphabet:
        raise LoadError(f"{path} is labeled over a different presentation")
    return c


def _vertex(c, name: str) -> int:
    for v in range(c.n):
        if c.name(v) == name:
            return v
    raise LoadError(f"no vertex named {name!r}")


def _morphism(args, source, target):
    if args.at:
        vc, _, vd = args.at.partition(":")
        return immersion(source, target, _vertex(source, vc), _vertex(target, vd))
    found = immersions(source, target, 0)
    return found[0] if found else None


def _print_morphism(m) -> None:
    c, d = m.source, m.target
    for v, img in enumerate(m.vertex_map):
        print(f"vertex {c.name(v)} -> {d.name(img)}")
    for i, j in enumerate(m.edge_map):
        u, x, v = c.one_cells[i]
        p, y, q = d.one_cells[j]
        print(f"edge {c.name(u)} {x} {c.name(v)} -> {d.name(p)} {y} {d.name(q)}")
    for i, j in enumerate(m.cell_map):
        print(f"cell {c.two_cells[i].label}@{c.name(c.two_cells[i].root)} -> "
              f"{d.two_cells[j].label}@{d.name(d.two_cells[j].root)}")


def cmd_immerse(args) -> int:
    pres = _pres(args) if args.pres else None
    source = _load_complex(args.source, pres)
    target = _load_complex(args.target, pres)
    m = _morphism(args, source, target)
    if m is None:
        print("none")
        return FALSE
    _print_morphism(m)
    return TRUE


def cmd_cover(args) -> int:
    pres = _pres(args) if args.pres else None
    if args.gens is not None:
        if pres is None:
            raise LoadError("-g needs -p")
        source = complex_of_automaton(coset_automaton(args.gens, pres, args.budget).unwrap())
    elif args.source:
        source = _load_complex(args.source, pres)
    else:
        raise LoadError("give either -g or --from")
    target = _load_complex(args.target, pres) if args.target else bouquet(source.pres)
    m = _morphism(args, source, target)
    if m is None:
        print("not an immersion")
        return FALSE
    result = is_covering(m)
    print("covering" if result else "immersion, not a covering")
    return TRUE if result else FALSE


def cmd_group_image(args) -> int:
    print(group_image(_pres(args)))
    return TRUE


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help=f"maximum number of expansion and fold steps ({DEFAULT_BUDGET})")
    common.add_argument("--oracle", action="store_true",
                        help="cross-check against the brute-force oracle")

    parser = argparse.ArgumentParser(prog="mxp",
                                     description="Immersions into 2-complexes via M(X,P).")
    parser.add_argument("--budget", type=int, dest="top_budget", default=None,
                        help=argparse.SUPPRESS)
    parser.add_argument("--oracle", action="store_true", dest="top_oracle",
                        help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help, pres_required=True):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("-p", "--pres", required=pres_required, help="presentation file")
        p.set_defaults(func=func)
        return p

    p = verb("coset", cmd_coset, "omega-coset automaton of <Y>^omega")
    p.add_argument("-g", "--gens", required=True, help='generators "w1; w2; ..."')
    p.add_argument("--dot")
    p.add_argument("--json")

    p = verb("schutz", cmd_schutz, "Schutzenberger automaton of a word")
    p.add_argument("-w", "--word", required=True)
    p.add_argument("--dot")
    p.add_argument("--json")

    for name, func, help in (("eq", cmd_eq, "u = w in M(X,P)"),
                             ("leq", cmd_leq, "u <= w in the natural order")):
        p = verb(name, func, help)
        p.add_argument("-u", required=True)
        p.add_argument("-w", "--word", required=True)

    p = verb("member", cmd_member, "w in <Y>^omega")
    p.add_argument("-g", "--gens", required=True)
    p.add_argument("-w", "--word", required=True)

    p = verb("conjugate", cmd_conjugate, "conjugator between two closed submonoids")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)

    p = verb("complex", cmd_complex, "coset complex C_H as JSON")
    p.add_argument("-g", "--gens", required=True)
    p.add_argument("--dot")
    p.add_argument("--json")

    p = verb("immerse", cmd_immerse, "labeled immersion between complexes", pres_required=False)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--at", help="basepoint pair v1:v2")

    p = verb("cover", cmd_cover, "is the immersion a covering", pres_required=False)
    p.add_argument("-g", "--gens")
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target", help="target complex (default B_{X,P})")
    p.add_argument("--at", help="basepoint pair v1:v2")

    verb("group-image", cmd_group_image, "presentation of the greatest group image")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = args.top_budget if args.top_budget is not None else DEFAULT_BUDGET
    args.oracle = args.oracle or args.top_oracle
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET
    except OracleDisagreement as exc:
        print(f"oracle disagreement: {exc}", file=sys.stderr)
        return DISAGREE
    except (ParseError, LoadError, ComplexError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
