import random

import pytest
from hypothesis import given, strategies as st

from mxp.core import Presentation, Word
from mxp.graph import (Automaton, GraphError, LabeledGraph, canonical_code, fold, iso_rooted,
                       iso_unrooted)
from mxp.oracle import munn_tree
from mxp.stephen import coset_automaton, flower, linear_automaton, schutzenberger

from strategies import presentations, words


@st.composite
def rooted_graphs(draw):
    """Connected rooted graphs: random petals and tails plus random chords."""
    pres = draw(presentations())
    g = LabeledGraph(pres, 1)
    for w in draw(st.lists(words(pres, 5), max_size=3)):
        if draw(st.booleans()):
            g.add_path(0, w, 0)
        else:
            g.add_path(draw(st.integers(0, g.n - 1)), w)
    for _ in range(draw(st.integers(0, 3))):
        u = draw(st.integers(0, g.n - 1))
        v = draw(st.integers(0, g.n - 1))
        g.add_edge(u, draw(st.sampled_from(pres.alphabet)), v)
    g.roots = (0, draw(st.integers(0, g.n - 1)))
    return g


def test_fold_merges_parallel_edges(free_a):
    g = LabeledGraph(free_a, 3, roots=(0, 0))
    g.add_edge(0, "a", 1)
    g.add_edge(0, "a", 2)
    a = fold(g)
    assert a.n == 2
    assert a.count("a") == 1


def test_fold_flower_of_idempotent(free_a):
    w = free_a.parse_word("a a'")
    g = flower([w], free_a)
    assert g.n == 2
    a = fold(g)
    assert a.n == 2 and a.count("a") == 1
    assert a.root_init == a.root_term
    assert iso_rooted(a, munn_tree(w, free_a))


def test_fold_deterministic_graph_unchanged(free_ab):
    g = linear_automaton(free_ab.parse_word("a b a"), free_ab)
    a = fold(g)
    assert a.n == 4
    assert sorted((u, str(l), v) for u, l, v in a.edges()) == [(0, "a", 1), (1, "b", 2), (2, "a", 3)]


def test_fold_requires_roots(free_a):
    with pytest.raises(GraphError):
        fold(LabeledGraph(free_a, 1))


def test_act_examples(projective):
    a = coset_automaton(["rho"], projective).unwrap()
    r = a.root_init
    s = next(v for v in a.vertices if v != r)
    assert a.act(r, "1") == r
    assert a.act(r, "a a") == r
    assert a.act(r, "rho") == r
    assert a.act(s, "rho") is None


def test_member_examples(projective, free_a):
    assert coset_automaton(["a"], projective).unwrap().member("a")
    assert schutzenberger("rho", projective).unwrap().member("a a")
    assert not schutzenberger("a", free_a).unwrap().member("a a")


def test_canonical_code_ignores_vertex_ids(free_ab):
    a = schutzenberger("a b a'", free_ab).unwrap()
    perm = [(v + 1) % a.n for v in a.vertices]
    trans = [None] * a.n
    for v in a.vertices:
        trans[perm[v]] = {r: perm[t] for r, t in a.trans[v].items()}
    b = Automaton(free_ab, trans, perm[a.root_init], perm[a.root_term])
    assert canonical_code(a) == canonical_code(b)
    assert canonical_code(a) == canonical_code(a)


def test_canonical_code_distinguishes_petals(free_ab):
    ab = coset_automaton(["a b"], free_ab).unwrap()
    ba = coset_automaton(["b a"], free_ab).unwrap()
    assert canonical_code(ab) != canonical_code(ba)


def test_iso_rooted_examples(free_a, free_ab):
    ys = [free_ab.parse_word("a b a'"), free_ab.parse_word("b b")]
    with_inverse = ys + [ys[0].invert()]
    assert iso_rooted(coset_automaton(ys, free_ab).unwrap(),
                      coset_automaton(with_inverse, free_ab).unwrap())
    loop = coset_automaton(["a"], free_a).unwrap()
    cycle = coset_automaton(["a a"], free_a).unwrap()
    assert not iso_rooted(loop, cycle)


def test_iso_rooted_sees_roots(free_ab):
    sa = schutzenberger("a b", free_ab).unwrap()
    swapped = sa.reroot(sa.root_term, sa.root_init)
    assert not iso_rooted(sa, swapped)
    coset = coset_automaton(["a b"], free_ab).unwrap()
    assert iso_rooted(coset, coset.reroot(coset.root_term, coset.root_init))


def test_iso_unrooted_projective(projective):
    h1 = coset_automaton(["rho"], projective).unwrap()
    h2 = coset_automaton(["a rho a"], projective).unwrap()
    iso = iso_unrooted(h1, h2)
    assert iso is not None
    assert iso[h1.loops("rho")[0]] == h2.loops("rho")[0]
    assert iso[h1.root_init] != h2.root_init
    assert iso_unrooted(h1, h1) == {v: v for v in h1.vertices}


def test_iso_unrooted_sizes_differ(projective):
    complete = coset_automaton(["a", "rho"], projective).unwrap()
    cover = coset_automaton(["rho", "a rho a"], projective).unwrap()
    assert iso_unrooted(complete, cover) is None


def test_from_edges_rejects_nondeterminism(free_a):
    with pytest.raises(GraphError):
        Automaton.from_edges(free_a, 3, [(0, "a", 1), (0, "a", 2)])
    with pytest.raises(GraphError):
        Automaton.from_edges(free_a, 2, [])


@given(rooted_graphs())
def test_fold_result_is_deterministic_and_connected(g):
    a = fold(g)
    assert a.is_deterministic()
    assert len(a.bfs_order()) == a.n


@given(rooted_graphs())
def test_fold_idempotent(g):
    a = fold(g)
    h = LabeledGraph(g.pres, a.n, roots=(a.root_init, a.root_term))
    for u, l, v in a.edges():
        h.add_edge(u, l, v)
    assert iso_rooted(fold(h), a)


@given(rooted_graphs(), st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_fold_order_independent(g, s1, s2):
    assert iso_rooted(fold(g, random.Random(s1)), fold(g, random.Random(s2)))
    assert iso_rooted(fold(g), fold(g, random.Random(s1)))


@given(rooted_graphs(), st.data())
def test_action_law(g, data):
    a = fold(g)
    v = data.draw(st.integers(0, a.n - 1))
    w = data.draw(words(g.pres, 6))
    end = a.act(v, w)
    if end is not None:
        assert a.act(v, w + w.invert() + w) == end


@given(rooted_graphs(), st.data())
def test_accepted_languages_upward_closed_under_cancellation(g, data):
    a = fold(g)
    pres = g.pres
    w1 = data.draw(words(pres, 4))
    w2 = data.draw(words(pres, 4))
    x = data.draw(st.sampled_from([l for l in pres.alphabet if not l.is_p]))
    if a.member(w1 + Word((x, x.inverse())) + w2):
        assert a.member(w1 + w2)


def test_canonical_code_separates_presentations():
    p1 = Presentation(("a",))
    p2 = Presentation(("b",))
    a1 = coset_automaton(["a"], p1).unwrap()
    a2 = coset_automaton(["b"], p2).unwrap()
    assert canonical_code(a1) != canonical_code(a2)
