"""Brute-force reference implementations used to cross-check the engine.

Nothing here touches ``FoldingGraph``: folding is done by naive relabelling
over an explicit edge set and relations are applied literally, in both
directions, as Stephen expansions.  Slow on purpose; desk-scale inputs only.
"""
from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from typing import Iterable

from .core import Letter, Presentation, Word
from .graph import Automaton, LabeledGraph
from .stephen import DEFAULT_BUDGET, SaturationReport, linear_automaton


class Evidence(enum.Enum):
    YES = "yes"
    NO_EVIDENCE = "no-evidence"


class _EdgeSetGraph:
    """Explicit involution-closed edge set with naive folding."""

    def __init__(self, g: LabeledGraph):
        self.next_id = g.n
        self.edges: set[tuple[int, Letter, int]] = set()
        self.roots = list(g.roots)
        self._step = None
        for u, l, v in g.edges:
            self.add(u, l, v)
        self.folds = 0

    def add(self, u, l, v):
        self._step = None
        self.edges.add((u, l, v))
        self.edges.add((v, l.inverse(), u))

    def fresh(self) -> int:
        self.next_id += 1
        return self.next_id - 1

    def add_path(self, u, w: Word, v):
        cur = u
        for i, l in enumerate(w):
            nxt = v if i == len(w) - 1 else self.fresh()
            self.add(cur, l, nxt)
            cur = nxt

    def fold(self):
        while True:
            seen = {}
            clash = None
            for u, l, v in self.edges:
                w = seen.setdefault((u, l), v)
                if w != v:
                    clash = (w, v)
                    break
            if clash is None:
                return
            keep, drop = min(clash), max(clash)
            self.edges = {(keep if u == drop else u, l, keep if v == drop else v)
                          for u, l, v in self.edges}
            self.roots = [keep if r == drop else r for r in self.roots]
            self._step = None
            self.folds += 1

    def read(self, v, w: Word):
        if self._step is None:
            self._step = {(u, l): t for u, l, t in self.edges}
        step = self._step
        for l in w:
            v = step.get((v, l))
            if v is None:
                return None
        return v

    def vertices(self):
        vs = {u for u, _, _ in self.edges} | set(self.roots)
        return sorted(vs)

    def to_automaton(self, pres: Presentation) -> Automaton:
        ids = {v: i for i, v in enumerate(self.vertices())}
        positive = [(ids[u], l, ids[v]) for u, l, v in self.edges if l.positive]
        return Automaton.from_edges(pres, len(ids), positive,
                                    ids[self.roots[0]], ids[self.roots[1]])


def _relations(pres: Presentation) -> list[tuple[Word, Word]]:
    """Both orientations of rho rho = rho and rho = rho bl(rho)."""
    out = []
    for rho in pres.p_letters:
        r = Word((pres.letter(rho),))
        for lhs, rhs in ((r + r, r), (r, r + pres.bl(rho))):
            if lhs != rhs:
                out += [(lhs, rhs), (rhs, lhs)]
    return out


def generic_saturate(g: LabeledGraph, budget: int = DEFAULT_BUDGET) -> SaturationReport:
    """Literal Stephen procedure: expansions u_i -> v_i plus naive folding."""
    pres = g.pres
    eg = _EdgeSetGraph(g)
    eg.fold()
    relations = _relations(pres)
    expansions = 0
    exhausted = False
    progress = True
    while progress:
        progress = False
        for v in eg.vertices():
            for side, other in relations:
                if expansions + eg.folds >= budget:
                    exhausted = True
                    break
                end = eg.read(v, side)
                if end is None or eg.read(v, other) == end:
                    continue
                eg.add_path(v, other, end)
                eg.fold()
                expansions += 1
                progress = True
                break
            if progress or exhausted:
                break
        if exhausted:
            break
    return SaturationReport(eg.to_automaton(pres), expansions, eg.folds, exhausted)


def munn_tree(w: Word, pres: Presentation) -> Automaton:
    """Folded linear automaton of a P-free word."""
    if w.has_p:
        raise ValueError(f"Munn trees are for words over X only, got {w}")
    eg = _EdgeSetGraph(linear_automaton(w, pres))
    eg.fold()
    return eg.to_automaton(pres)


@lru_cache(maxsize=2048)
def _generic_sa(s: Word, pres: Presentation, budget: int) -> Automaton:
    return generic_saturate(linear_automaton(s, pres), budget).unwrap()


def generic_leq(s: Word, w: Word, pres: Presentation, budget: int = DEFAULT_BUDGET) -> bool:
    return _generic_sa(s, pres, budget).member(w)


def naive_member(w: Word | str, ys: Iterable[Word | str], pres: Presentation,
                 len_bound: int, budget: int = DEFAULT_BUDGET) -> Evidence:
    """Search products s of at most ``len_bound`` factors from Y u Y^-1 with s <= w.

    Sound but incomplete: NO_EVIDENCE does not mean non-membership.
    """
    w = pres.parse_word(w)
    gens = pres.parse_words(ys)
    factors = sorted(set(gens) | {y.invert() for y in gens}, key=str)
    for k in range(len_bound + 1):
        for combo in itertools.product(factors, repeat=k):
            s = Word(tuple(l for f in combo for l in f))
            if generic_leq(s, w, pres, budget):
                return Evidence.YES
    return Evidence.NO_EVIDENCE
