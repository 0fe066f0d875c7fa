"""Coset automata for the finite generator sets of the projective plane and wedge tables.

Prints one row per generator set: vertex count, edge counts per label, and
whether the coset complex covers the bouquet B_{X,P}.

    python3 scripts/coset_table.py
"""
from __future__ import annotations

from mxp import Presentation, bouquet, complex_of_automaton, coset_automaton, immersion, is_covering

TABLES = {
    "projective plane (rho = rho a a)": (
        Presentation.build(["a"], {"rho": "a a"}),
        ["a; rho", "rho", "rho; a rho a", "a", "a a a a a", "", "a a a a a' a' a' a'"],
    ),
    "wedge (rho = rho b)": (
        Presentation.build(["a", "b"], {"rho": "b"}),
        ["a; b; rho", "a; b", "b; rho", "a rho a'"],
    ),
}


def row(pres: Presentation, gens: str) -> str:
    report = coset_automaton(gens, pres)
    a = report.unwrap()
    counts = " ".join(f"{x}={a.count(x)}" for x in pres.x_letters + pres.p_letters)
    c = complex_of_automaton(a)
    cover = is_covering(immersion(c, bouquet(pres), 0, 0))
    label = "{" + (gens or "") + "}"
    return (f"  {label:<24} vertices={a.n:<2} {counts:<16} "
            f"steps={report.expansions_applied}+{report.folds_applied:<3} covering={cover}")


def main() -> None:
    for title, (pres, rows) in TABLES.items():
        print(title)
        for gens in rows:
            print(row(pres, gens))
        print()


if __name__ == "__main__":
    main()
