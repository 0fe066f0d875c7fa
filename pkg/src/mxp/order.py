"""Word problem, natural order and submonoid questions in M(X, P).

Everything reduces to membership in Schutzenberger or omega-coset automata.
Incomplete saturations raise ``BudgetExhausted``.
"""
from __future__ import annotations

from typing import Iterable

from .core import Presentation, Word
from .graph import Automaton, iso_unrooted
from .stephen import DEFAULT_BUDGET, coset_automaton, schutzenberger


def leq(u: Word | str, w: Word | str, pres: Presentation, budget: int = DEFAULT_BUDGET) -> bool:
    """u <= w in the natural partial order."""
    u, w = pres.parse_word(u), pres.parse_word(w)
    return schutzenberger(u, pres, budget).unwrap().member(w)


def word_eq(u: Word | str, w: Word | str, pres: Presentation, budget: int = DEFAULT_BUDGET) -> bool:
    return leq(u, w, pres, budget) and leq(w, u, pres, budget)


def is_idempotent(w: Word | str, pres: Presentation, budget: int = DEFAULT_BUDGET) -> bool:
    w = pres.parse_word(w)
    return word_eq(w, w + w, pres, budget)


def submonoid_member(w: Word | str, ys: Iterable[Word | str] | str, pres: Presentation,
                     budget: int = DEFAULT_BUDGET) -> bool:
    """w in <Y>^omega."""
    return coset_automaton(ys, pres, budget).unwrap().member(pres.parse_word(w))


def conjugator(a1: Automaton, a2: Automaton) -> Word | None:
    """A word m with m^-1 H2 m <= H1 and m H1 m^-1 <= H2, for coset automata.

    The stabilizer of vertex v in a2 equals H1 exactly when a2 re-rooted at v
    is isomorphic to a1; m is the shortest path label from a2's root to v.
    """
    iso = iso_unrooted(a2, a1)
    if iso is None:
        return None
    v = next(u for u, img in iso.items() if img == a1.root_init)
    return a2.shortest_word(a2.root_init, v)


def conjugate(ys1: Iterable[Word | str] | str, ys2: Iterable[Word | str] | str,
              pres: Presentation, budget: int = DEFAULT_BUDGET) -> Word | None:
    a1 = coset_automaton(ys1, pres, budget).unwrap()
    a2 = coset_automaton(ys2, pres, budget).unwrap()
    return conjugator(a1, a2)
