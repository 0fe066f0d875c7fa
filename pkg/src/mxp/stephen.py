"""Schutzenberger and omega-coset automata of M(X, P) by saturation.

Folding and expansions are interleaved until nothing applies.  For M(X, P)
the two relation schemas reduce to two rules on a folded graph:

* R-loop: a rho-edge u - v with u != v forces u = v (rho^2 = rho);
* R-bound: a rho-loop at v forces a closed path labeled bl(rho) at v
  (rho = rho bl(rho)).

The graph is folded to a fixed point after every single expansion.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import Presentation, Word
from .graph import Automaton, FoldingGraph, LabeledGraph

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 1_000_000


class BudgetExhausted(RuntimeError):
    """Saturation stopped before reaching a complete automaton."""

    def __init__(self, report: "SaturationReport"):
        self.report = report
        super().__init__(
            f"step budget exhausted after {report.expansions_applied} expansions "
            f"and {report.folds_applied} folds")


@dataclass(frozen=True)
class SaturationReport:
    result: Automaton
    expansions_applied: int
    folds_applied: int
    budget_exhausted: bool
    # ("fold", letter) / ("expand", "rho^2" | "rho bl") in application order
    steps: tuple[tuple[str, str], ...] = ()

    def unwrap(self) -> Automaton:
        """The automaton, or BudgetExhausted if it is only approximate."""
        if self.budget_exhausted:
            raise BudgetExhausted(self)
        return self.result


def linear_automaton(w: Word, pres: Presentation) -> LabeledGraph:
    """Path spelling w from the initial to the terminal root."""
    g = LabeledGraph(pres, 1)
    end = g.add_path(0, w)
    g.roots = (0, end)
    return g


def flower(ys: Iterable[Word], pres: Presentation) -> LabeledGraph:
    """One petal per generator, all closed at the hub (vertex 0)."""
    g = LabeledGraph(pres, 1, roots=(0, 0))
    for y in ys:
        g.add_path(0, y, 0)
    return g


def saturate(g: LabeledGraph, budget: int = DEFAULT_BUDGET,
             rng: random.Random | None = None) -> SaturationReport:
    """Fold and expand ``g`` over its presentation until complete.

    ``rng`` shuffles the fold queue and the order in which vertices and
    2-cell letters are visited; any schedule reaches the same automaton.
    """
    if g.roots is None:
        raise ValueError("saturate needs a rooted graph")
    pres = g.pres
    fg = FoldingGraph.from_graph(g, rng)
    fg.settle()
    rho_ranks = [pres.letter_rank[l] for l in pres.alphabet if l.is_p]
    bounds = {r: pres.ranks(pres.bl(pres.alphabet[r])) for r in rho_ranks}
    expansions = 0
    exhausted = False

    def spent():
        return expansions + fg.folds >= budget

    changed = bool(rho_ranks)
    while changed and not exhausted:
        changed = False
        reps = fg.reps()
        if rng is not None:
            rng.shuffle(reps)
            rng.shuffle(rho_ranks)
        for v in reps:
            if fg.parent[v] != v:
                continue
            for r in rho_ranks:
                if spent():
                    exhausted = True
                    break
                t = fg.target(v, r)
                if t is None:
                    continue
                v = fg.find(v)
                if t != v:
                    expansions += 1
                    fg.events.append(("expand", "rho^2"))
                    fg.merge(v, t, r)
                    fg.settle()
                    changed = True
                    v = fg.find(v)
                word = bounds[r]
                if not word:
                    continue
                end, k = fg.trace(v, word)
                if k == len(word) and end == v:
                    continue
                expansions += 1
                fg.events.append(("expand", "rho bl"))
                if k == len(word):
                    fg.merge(end, v, word[-1])
                else:
                    fg.add_path(end, word[k:], v)
                fg.settle()
                changed = True
                v = fg.find(v)
            if exhausted:
                break
    if exhausted:
        log.warning("saturation budget %d exhausted", budget)
    return SaturationReport(
        result=fg.freeze(*g.roots),
        expansions_applied=expansions,
        folds_applied=fg.folds,
        budget_exhausted=exhausted,
        steps=tuple(fg.events),
    )


@lru_cache(maxsize=4096)
def _schutzenberger(w: Word, pres: Presentation, budget: int) -> SaturationReport:
    return saturate(linear_automaton(w, pres), budget)


def schutzenberger(w: Word | str, pres: Presentation, budget: int = DEFAULT_BUDGET) -> SaturationReport:
    """SA(w): accepts exactly the words u with w <= u in M(X, P)."""
    return _schutzenberger(pres.parse_word(w), pres, budget)


@lru_cache(maxsize=4096)
def _coset_automaton(ys: tuple[Word, ...], pres: Presentation, budget: int) -> SaturationReport:
    return saturate(flower(ys, pres), budget)


def coset_automaton(ys: Iterable[Word | str] | str, pres: Presentation,
                    budget: int = DEFAULT_BUDGET) -> SaturationReport:
    """Omega-coset automaton of the closed inverse submonoid <Y>^omega."""
    return _coset_automaton(pres.parse_words(ys), pres, budget)
