"""Labeled 2-complexes and immersions between them.

A 2-cell is stored combinatorially as its label, root vertex and boundary
walk.  Its graph Gamma_C is the 1-skeleton plus a rho-loop at the root of
each rho-labeled 2-cell.  Immersions and coverings are decided on these
graphs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Kind, Letter, Presentation, Word
from .graph import Automaton, GraphError, iso_unrooted
from .stephen import DEFAULT_BUDGET, coset_automaton

Step = tuple[int, Letter, int]


class ComplexError(ValueError):
    """Invalid complex: broken boundary walk, non-determinism, disconnection."""


@dataclass(frozen=True)
class TwoCell:
    label: str
    root: int
    walk: tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "walk", tuple(tuple(s) for s in self.walk))

    @property
    def word(self) -> Word:
        return Word(tuple(l for _, l, _ in self.walk))


@dataclass(frozen=True)
class TwoComplex:
    """Finite connected 2-complex labeled over a presentation.

    Vertices are ``0..n-1``; ``names`` only matter for text and JSON output.
    ``one_cells`` lists positively oriented edges ``(u, x, v)``.
    """

    pres: Presentation
    n: int
    one_cells: tuple[tuple[int, str, int], ...] = ()
    two_cells: tuple[TwoCell, ...] = ()
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "one_cells", tuple(tuple(e) for e in self.one_cells))
        object.__setattr__(self, "two_cells", tuple(self.two_cells))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.n or len(set(self.names)) != self.n:
                raise ComplexError("vertex names must be distinct, one per vertex")
        self._validate()

    def _validate(self):
        pres = self.pres
        if self.n < 1:
            raise ComplexError("a 2-complex needs at least one vertex")
        edges = set()
        for u, x, v in self.one_cells:
            if x not in pres.x_letters:
                raise ComplexError(f"1-cell label {x!r} is not a generator")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ComplexError(f"1-cell ({u}, {x}, {v}) has a dangling endpoint")
            edges.add((u, x, v))
        anchors = [(cell.label, cell.root) for cell in self.two_cells]
        if len(set(anchors)) != len(anchors):
            raise ComplexError("two 2-cells with the same label share a root")
        for cell in self.two_cells:
            if cell.label not in pres.p_letters:
                raise ComplexError(f"2-cell label {cell.label!r} is not declared")
            if not 0 <= cell.root < self.n:
                raise ComplexError(f"2-cell root {cell.root} is not a vertex")
            if cell.word != pres.bl(cell.label):
                raise ComplexError(
                    f"boundary walk of {cell.label} at {self.name(cell.root)} reads "
                    f"{cell.word}, expected {pres.bl(cell.label)}")
            at = cell.root
            for u, l, v in cell.walk:
                if u != at:
                    raise ComplexError(f"boundary walk of {cell.label} is not a path")
                present = (u, l.name, v) in edges if l.kind is Kind.X else (v, l.name, u) in edges
                if not present:
                    raise ComplexError(
                        f"boundary walk of {cell.label} uses missing edge "
                        f"{self.name(u)} {l} {self.name(v)}")
                at = v
            if at != cell.root:
                raise ComplexError(f"boundary walk of {cell.label} is not closed at its root")
        try:
            graph_of_complex(self)
        except GraphError as exc:
            raise ComplexError(str(exc)) from None

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def __repr__(self):
        return (f"TwoComplex(n={self.n}, one_cells={len(self.one_cells)}, "
                f"two_cells={len(self.two_cells)})")


def graph_of_complex(c: TwoComplex, root: int = 0) -> Automaton:
    """Gamma_C rooted at ``root``; raises GraphError unless deterministic."""
    edges: list[tuple[int, Letter | str, int]] = list(c.one_cells)
    edges += [(cell.root, Letter(cell.label, Kind.P), cell.root) for cell in c.two_cells]
    return Automaton.from_edges(c.pres, c.n, edges, root, root)


def stabilizer(c: TwoComplex, v: int) -> Automaton:
    """Gamma_C with both roots at v; accepts the loop monoid L(C, v)."""
    return graph_of_complex(c, v)


def complex_of_automaton(a: Automaton, names: Sequence[str] | None = None) -> TwoComplex:
    """Coset complex: X-edges become 1-cells, rho-loops become 2-cells.

    Each 2-cell's walk is the unique path labeled bl(rho) from the loop's
    vertex, which must close up (the automaton has to be saturated).
    """
    pres = a.pres
    one_cells = []
    loops = []
    for u, l, v in a.edges():
        if l.is_p:
            if u != v:
                raise ComplexError(f"{l}-edge {u} - {v} is not a loop; automaton not saturated")
            loops.append((u, l))
        else:
            one_cells.append((u, l.name, v))
    cells = []
    for v, l in loops:
        walk = []
        at = v
        for x in pres.bl(l):
            nxt = a.target(at, x)
            if nxt is None:
                raise ComplexError(f"no path {pres.bl(l)} at vertex {v}; automaton not saturated")
            walk.append((at, x, nxt))
            at = nxt
        if at != v:
            raise ComplexError(f"path {pres.bl(l)} at vertex {v} is not closed; not saturated")
        cells.append(TwoCell(l.name, v, tuple(walk)))
    return TwoComplex(pres, a.n, tuple(one_cells), tuple(cells), names)


def coset_complex(ys: Iterable[Word | str] | str, pres: Presentation,
                  budget: int = DEFAULT_BUDGET) -> TwoComplex:
    """C_H for H = <Y>^omega; vertex 0 is the root H."""
    return complex_of_automaton(coset_automaton(ys, pres, budget).unwrap())


def bouquet(pres: Presentation) -> TwoComplex:
    """B_{X,P}: one vertex, one loop per generator, one 2-cell per rho."""
    one_cells = tuple((0, x, 0) for x in pres.x_letters)
    cells = tuple(TwoCell(rho, 0, tuple((0, l, 0) for l in pres.bl(rho)))
                  for rho in pres.p_letters)
    return TwoComplex(pres, 1, one_cells, cells)


@dataclass(frozen=True)
class Morphism:
    """Label-preserving cellular map ``source -> target``.

    ``edge_map`` and ``cell_map`` map indices into ``one_cells`` /
    ``two_cells``.
    """

    source: TwoComplex
    target: TwoComplex
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    cell_map: tuple[int, ...]


def _graph_morphism(gc: Automaton, gd: Automaton, v_c: int, v_d: int) -> list[int] | None:
    image = {v_c: v_d}
    queue = deque([v_c])
    while queue:
        u = queue.popleft()
        out_d = gd.trans[image[u]]
        for r, t in gc.trans[u].items():
            img = out_d.get(r)
            if img is None:
                return None
            seen = image.get(t)
            if seen is None:
                image[t] = img
                queue.append(t)
            elif seen != img:
                return None
    if len(image) != gc.n:
        return None
    return [image[v] for v in range(gc.n)]


def immersion(c: TwoComplex, d: TwoComplex, v_c: int, v_d: int) -> Morphism | None:
    """The unique labeled immersion c -> d sending v_c to v_d, if any.

    Determinism of Gamma_D forces the image of every path from v_c, so a
    BFS either builds the map or finds a missing or inconsistent edge.
    """
    if c.pres.alphabet != d.pres.alphabet:
        raise ValueError("complexes are labeled over different presentations")
    vmap = _graph_morphism(graph_of_complex(c), graph_of_complex(d), v_c, v_d)
    if vmap is None:
        return None
    d_edges = {e: i for i, e in enumerate(d.one_cells)}
    d_cells = {(cell.label, cell.root): i for i, cell in enumerate(d.two_cells)}
    edge_map = tuple(d_edges[(vmap[u], x, vmap[v])] for u, x, v in c.one_cells)
    cell_map = tuple(d_cells[(cell.label, vmap[cell.root])] for cell in c.two_cells)
    return Morphism(c, d, tuple(vmap), edge_map, cell_map)


def immersions(c: TwoComplex, d: TwoComplex, v_c: int = 0) -> list[Morphism]:
    """All labeled immersions c -> d, one per feasible image of v_c."""
    out = []
    for v_d in range(d.n):
        m = immersion(c, d, v_c, v_d)
        if m is not None:
            out.append(m)
    return out


def is_covering(m: Morphism) -> bool:
    """Every edge and rho-loop at an image vertex lifts to its preimages."""
    gc, gd = graph_of_complex(m.source), graph_of_complex(m.target)
    if set(m.vertex_map) != set(gd.vertices):
        return False
    return all(set(gd.trans[m.vertex_map[u]]) <= set(gc.trans[u]) for u in gc.vertices)


def isomorphism(c: TwoComplex, d: TwoComplex) -> tuple[int, ...] | None:
    """Vertex map of a labeled isomorphism c -> d, if one exists."""
    if c.n != d.n or len(c.one_cells) != len(d.one_cells) or len(c.two_cells) != len(d.two_cells):
        return None
    iso = iso_unrooted(graph_of_complex(c), graph_of_complex(d))
    if iso is None:
        return None
    vmap = tuple(iso[v] for v in range(c.n))
    d_edges = set(d.one_cells)
    if {(vmap[u], x, vmap[v]) for u, x, v in c.one_cells} != d_edges:
        return None
    d_walks = {(cell.label, cell.root, cell.walk) for cell in d.two_cells}
    mapped = {(cell.label, vmap[cell.root], tuple((vmap[u], l, vmap[v]) for u, l, v in cell.walk))
              for cell in c.two_cells}
    if mapped != d_walks:
        return None
    return vmap


@dataclass(frozen=True)
class Translator:
    """Word map x -> x, rho -> p rho p^-1 between equivalent presentations."""

    source: Presentation
    target: Presentation
    rho: str
    prefix: Word

    def __call__(self, w: Word | str) -> Word:
        w = self.source.parse_word(w)
        out: list[Letter] = []
        for l in w:
            if l.is_p and l.name == self.rho:
                out += list(self.prefix) + [l] + list(self.prefix.invert())
            else:
                out.append(l)
        return Word(tuple(out))

    def words(self, ws: Iterable[Word | str] | str) -> tuple[Word, ...]:
        return tuple(self(w) for w in self.source.parse_words(ws))


def rebase_boundary(pres: Presentation, rho: str, k: int, reverse: bool = False
                    ) -> tuple[Presentation, Translator]:
    """Move the root of rho's boundary walk k steps along, optionally reversing it.

    For bl(rho) = p q with |p| = k the new boundary label is q p (inverted
    when ``reverse``), and rho is sent to p rho p^-1.
    """
    bl = pres.bl(rho)
    if not (0 <= k < max(len(bl), 1)):
        raise ValueError(f"rotation {k} out of range for boundary of length {len(bl)}")
    p, q = bl[:k], bl[k:]
    new = q + p
    if reverse:
        new = new.invert()
    target = pres.with_cell(rho, new)
    return target, Translator(pres, target, rho, p)
