"""Involutive labeled graphs, Stallings folding and inverse automata.

Letters are handled internally by their rank in ``Presentation.alphabet``;
an automaton stores, for every vertex, a dict ``rank -> target`` holding both
an edge and its inverse partner (P letters are self-inverse).
"""
from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Iterator, Sequence

from .core import Letter, Presentation, Word


class GraphError(ValueError):
    """Structural violation: non-determinism, dangling vertex, bad root."""


class LabeledGraph:
    """Mutable labeled multigraph over X u X^-1 u P, prior to folding.

    Each stored edge ``(u, letter, v)`` stands for itself and its inverse
    edge ``(v, letter^-1, u)``.
    """

    def __init__(self, pres: Presentation, n: int = 0, roots: tuple[int, int] | None = None):
        self.pres = pres
        self.n = n
        self.edges: list[tuple[int, Letter, int]] = []
        self.roots = roots

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, letter: Letter | str, v: int) -> None:
        if isinstance(letter, str):
            letter = self.pres.letter(letter)
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {letter}, {v}) has a dangling endpoint")
        if letter not in self.pres.letter_rank:
            raise GraphError(f"letter {letter} not in presentation")
        self.edges.append((u, letter, v))

    def add_path(self, u: int, w: Word, v: int | None = None) -> int:
        """Spell ``w`` from ``u`` through fresh vertices, ending at ``v``.

        With ``v=None`` the path ends at a fresh vertex.  An empty word needs
        ``v`` to be ``None`` or ``u``.
        """
        if not len(w):
            if v not in (None, u):
                raise GraphError("cannot join two distinct vertices by the empty word")
            return u
        cur = u
        for i, l in enumerate(w):
            last = i == len(w) - 1
            nxt = v if (last and v is not None) else self.add_vertex()
            self.add_edge(cur, l, nxt)
            cur = nxt
        return cur

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, edges={len(self.edges)}, roots={self.roots})"


class Automaton:
    """Birooted deterministic connected labeled graph (an inverse automaton).

    Values are treated as immutable once built.  ``trans[v]`` maps letter
    ranks to targets.
    """

    __slots__ = ("pres", "trans", "root_init", "root_term", "_code")

    def __init__(self, pres: Presentation, trans: Sequence[dict[int, int]],
                 root_init: int = 0, root_term: int | None = None):
        self.pres = pres
        self.trans = tuple(trans)
        self.root_init = root_init
        self.root_term = root_init if root_term is None else root_term
        self._code = None
        if self.trans and not (0 <= self.root_init < self.n and 0 <= self.root_term < self.n):
            raise GraphError("root outside the vertex set")

    @classmethod
    def from_edges(cls, pres: Presentation, n: int, edges: Iterable[tuple[int, Letter | str, int]],
                   root_init: int = 0, root_term: int | None = None,
                   check_connected: bool = True) -> "Automaton":
        """Build from positive edges; raises GraphError unless deterministic."""
        rank, inv = pres.letter_rank, pres.inverse_rank
        trans: list[dict[int, int]] = [{} for _ in range(n)]

        def put(u, r, v):
            old = trans[u].get(r)
            if old is not None and old != v:
                raise GraphError(
                    f"not deterministic: two {pres.alphabet[r]}-edges at vertex {u}")
            trans[u][r] = v

        for u, l, v in edges:
            if isinstance(l, str):
                l = pres.letter(l)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {l}, {v}) has a dangling endpoint")
            if l not in rank:
                raise GraphError(f"letter {l} not in presentation")
            r = rank[l]
            put(u, r, v)
            put(v, inv[r], u)
        a = cls(pres, trans, root_init, root_term)
        if check_connected and n and len(a.bfs_order()) != n:
            raise GraphError("automaton is not connected")
        return a

    @property
    def n(self) -> int:
        return len(self.trans)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, Letter, int]]:
        """Positive X-edges and P-edges, each listed once."""
        alphabet = self.pres.alphabet
        for u, out in enumerate(self.trans):
            for r, v in sorted(out.items()):
                l = alphabet[r]
                if l.is_p:
                    if u <= v:
                        yield u, l, v
                elif l.positive:
                    yield u, l, v

    def count(self, letter: str) -> int:
        """Number of (positive) edges with the given label."""
        return sum(1 for _, l, _ in self.edges() if l.name == letter)

    def loops(self, letter: str) -> list[int]:
        return [u for u, l, v in self.edges() if l.name == letter and u == v]

    def target(self, v: int, letter: Letter | str) -> int | None:
        if isinstance(letter, str):
            letter = self.pres.letter(letter)
        return self.trans[v].get(self.pres.letter_rank[letter])

    def act(self, v: int, w: Word | str) -> int | None:
        """Partial action of a word on a vertex; None where undefined."""
        w = self.pres.parse_word(w)
        rank = self.pres.letter_rank
        for l in w:
            v = self.trans[v].get(rank[l])
            if v is None:
                return None
        return v

    def member(self, w: Word | str) -> bool:
        return self.act(self.root_init, w) == self.root_term

    def reroot(self, init: int, term: int | None = None) -> "Automaton":
        return Automaton(self.pres, self.trans, init, term)

    def is_deterministic(self) -> bool:
        inv = self.pres.inverse_rank
        return all(self.trans[v].get(inv[r]) == u
                   for u, out in enumerate(self.trans) for r, v in out.items())

    def bfs_order(self) -> list[int]:
        """Vertices by discovery from the initial root, letters in rank order."""
        if not self.trans:
            return []
        seen = {self.root_init}
        order = [self.root_init]
        for v in order:
            out = self.trans[v]
            for r in sorted(out):
                t = out[r]
                if t not in seen:
                    seen.add(t)
                    order.append(t)
        return order

    def shortest_word(self, source: int, target: int) -> Word | None:
        """Label of a BFS-shortest path, letters tried in rank order."""
        alphabet = self.pres.alphabet
        back: dict[int, tuple[int, int] | None] = {source: None}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            if v == target:
                break
            out = self.trans[v]
            for r in sorted(out):
                t = out[r]
                if t not in back:
                    back[t] = (v, r)
                    queue.append(t)
        if target not in back:
            return None
        letters = []
        v = target
        while back[v] is not None:
            v, r = back[v]
            letters.append(alphabet[r])
        return Word(tuple(reversed(letters)))

    def canonical(self) -> tuple["Automaton", list[int]]:
        """Renumber vertices by BFS discovery; returns (automaton, old ids)."""
        order = self.bfs_order()
        new = {v: i for i, v in enumerate(order)}
        trans = [{r: new[t] for r, t in self.trans[v].items()} for v in order]
        return Automaton(self.pres, trans, new[self.root_init], new[self.root_term]), order

    def canonical_code(self) -> bytes:
        if self._code is None:
            self._code = canonical_code(self)
        return self._code

    def __repr__(self):
        counts = ", ".join(f"{x}={self.count(x)}" for x in self.pres.x_letters + self.pres.p_letters)
        return (f"Automaton(n={self.n}, {counts}, "
                f"roots=({self.root_init}, {self.root_term}))")


def canonical_code(a: Automaton) -> bytes:
    """Byte string equal for two automata iff they are rooted-isomorphic.

    Vertices are numbered by BFS from the initial root with letters tried in
    the presentation's fixed order; determinism makes the numbering forced.
    """
    order = a.bfs_order()
    if len(order) != a.n:
        raise GraphError("canonical code needs a connected automaton")
    new = {v: i for i, v in enumerate(order)}
    alphabet = a.pres.alphabet
    edges = sorted((new[u], a.pres.letter_rank[l], new[v]) for u, l, v in a.edges())
    parts = [
        " ".join(str(l) for l in alphabet),
        str(a.n),
        ";".join(f"{u},{r},{v}" for u, r, v in edges),
        f"{new[a.root_init]},{new[a.root_term]}",
    ]
    return "|".join(parts).encode()


def iso_rooted(a: Automaton, b: Automaton) -> bool:
    return a.canonical_code() == b.canonical_code()


def iso_unrooted(a: Automaton, b: Automaton) -> dict[int, int] | None:
    """Label-preserving isomorphism a -> b ignoring a's roots.

    b is taken at its (coinciding) roots and a is re-rooted at every vertex
    in BFS order from its own root, so the first match is a nearest one.
    """
    if a.n != b.n or a.pres.alphabet != b.pres.alphabet:
        return None
    target = b.reroot(b.root_init, b.root_init)
    code_b = target.canonical_code()
    order_b = target.bfs_order()
    for v in a.bfs_order():
        ra = a.reroot(v, v)
        if ra.canonical_code() == code_b:
            return dict(zip(ra.bfs_order(), order_b))
    return None


class FoldingGraph:
    """Union-find working copy of a labeled graph, folded on demand.

    ``merge`` only queues an identification; ``settle`` runs the fold
    cascade to a fixed point.  ``folds`` counts unions of distinct classes.
    """

    def __init__(self, pres: Presentation, rng: random.Random | None = None):
        self.pres = pres
        self.rng = rng
        self.inv = pres.inverse_rank
        self.parent: list[int] = []
        self.out: list[dict[int, int] | None] = []
        self.pending: deque[tuple[int, int, int | None]] = deque()
        self.folds = 0
        self.events: list[tuple[str, str]] = []

    @classmethod
    def from_graph(cls, g: LabeledGraph, rng: random.Random | None = None) -> "FoldingGraph":
        fg = cls(g.pres, rng)
        for _ in range(g.n):
            fg.new_vertex()
        rank = g.pres.letter_rank
        edges = list(g.edges)
        if rng is not None:
            rng.shuffle(edges)
        for u, l, v in edges:
            fg.add_edge(u, rank[l], v)
        return fg

    def new_vertex(self) -> int:
        self.parent.append(len(self.parent))
        self.out.append({})
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def _attach(self, u: int, r: int, v: int) -> None:
        slot = self.out[u]
        old = slot.get(r)
        if old is None:
            slot[r] = v
        elif old != v:
            self.pending.append((old, v, r))

    def add_edge(self, u: int, r: int, v: int) -> None:
        u, v = self.find(u), self.find(v)
        self._attach(u, r, v)
        self._attach(v, self.inv[r], u)

    def add_path(self, u: int, ranks: Sequence[int], v: int) -> None:
        """Fresh path spelling ``ranks`` from u to v (ranks nonempty)."""
        cur = u
        for i, r in enumerate(ranks):
            nxt = v if i == len(ranks) - 1 else self.new_vertex()
            self.add_edge(cur, r, nxt)
            cur = nxt

    def merge(self, a: int, b: int, r: int | None = None) -> None:
        self.pending.append((a, b, r))

    def settle(self) -> None:
        find, out, parent = self.find, self.out, self.parent
        alphabet = self.pres.alphabet
        pending, rng = self.pending, self.rng
        while pending:
            if rng is not None:
                pending.rotate(-rng.randrange(len(pending)))
            a, b, r = pending.popleft()
            a, b = find(a), find(b)
            if a == b:
                continue
            if len(out[a]) < len(out[b]):
                a, b = b, a
            parent[b] = a
            self.folds += 1
            self.events.append(("fold", alphabet[r].name if r is not None else "?"))
            moved, out[b] = out[b], None
            slot = out[a]
            for s, t in moved.items():
                old = slot.get(s)
                if old is None:
                    slot[s] = t
                elif find(old) != find(t):
                    self.pending.append((old, t, s))

    def target(self, v: int, r: int) -> int | None:
        t = self.out[self.find(v)].get(r)
        return None if t is None else self.find(t)

    def trace(self, v: int, ranks: Sequence[int]) -> tuple[int, int]:
        """Follow ``ranks`` from v; returns (last vertex reached, letters read)."""
        v = self.find(v)
        for k, r in enumerate(ranks):
            t = self.out[v].get(r)
            if t is None:
                return v, k
            v = self.find(t)
        return v, len(ranks)

    def reps(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p == v]

    def freeze(self, root_init: int, root_term: int) -> Automaton:
        """Deterministic quotient, renumbered by BFS from the initial root."""
        find = self.find
        start = find(root_init)
        new = {start: 0}
        order = [start]
        for v in order:
            out = self.out[v]
            for r in sorted(out):
                t = find(out[r])
                if t not in new:
                    new[t] = len(order)
                    order.append(t)
        trans = [{r: new[find(t)] for r, t in self.out[v].items()} for v in order]
        return Automaton(self.pres, trans, 0, new[find(root_term)])


def fold(g: LabeledGraph, rng: random.Random | None = None) -> Automaton:
    """Stallings folding of a rooted graph to its deterministic quotient.

    ``rng`` randomises the order in which folds are applied; the result does
    not depend on it.
    """
    if g.roots is None:
        raise GraphError("fold needs a rooted graph")
    fg = FoldingGraph.from_graph(g, rng)
    fg.settle()
    return fg.freeze(*g.roots)


def act(a: Automaton, v: int, w: Word | str) -> int | None:
    return a.act(v, w)


def member(a: Automaton, w: Word | str) -> bool:
    return a.member(w)
