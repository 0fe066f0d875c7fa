"""Acceptance criteria 1-9.

Each criterion is a plain function returning None or raising
AssertionError.  ``_run`` clears the memo caches, times it, prints one
PASS/FAIL line and enforces the 1 s limit.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest.
"""
from __future__ import annotations

import random
import sys
import time

import pytest

from mxp import oracle, stephen
from mxp.complex import (bouquet, complex_of_automaton, coset_complex, graph_of_complex,
                         immersion, immersions, is_covering, isomorphism, rebase_boundary,
                         stabilizer)
from mxp.core import Presentation, Word
from mxp.graph import canonical_code, iso_rooted
from mxp.oracle import Evidence, generic_saturate, naive_member
from mxp.order import (conjugate, conjugator, is_idempotent, leq, submonoid_member, word_eq)
from mxp.sampling import random_generators, random_presentation, random_word
from mxp.stephen import coset_automaton, flower, saturate

TIME_LIMIT = 1.0

PROJECTIVE = Presentation.build(["a"], {"rho": "a a"})
TORUS = Presentation.build(["a", "b"], {"rho": "a b a' b'"})
WEDGE = Presentation.build(["a", "b"], {"rho": "b"})
TORUS_Y = "a' b' a b; a b rho a'"

# generator sets of suites 1-3, reused by the classification criteria
SUITE = [
    (PROJECTIVE, "a; rho"), (PROJECTIVE, "rho"), (PROJECTIVE, "rho; a rho a"),
    (PROJECTIVE, "a"), (PROJECTIVE, "a a a a a"), (PROJECTIVE, ()),
    (PROJECTIVE, "a a a a a' a' a' a'"),
    (TORUS, TORUS_Y),
    (WEDGE, "a; b; rho"), (WEDGE, "a; b"),
]


def _shape(a):
    return a.n, {x: a.count(x) for x in a.pres.x_letters + a.pres.p_letters}


def _covers_bouquet(a) -> bool:
    c = complex_of_automaton(a)
    return is_covering(immersion(c, bouquet(a.pres), 0, 0))


def _agrees_with_oracle(ys, pres):
    g = flower(pres.parse_words(ys), pres)
    return iso_rooted(saturate(g).unwrap(), generic_saturate(g).unwrap())


def criterion_1():
    pp = PROJECTIVE
    a = coset_automaton("a; rho", pp).unwrap()
    assert _shape(a) == (1, {"a": 1, "rho": 1}) and _covers_bouquet(a)
    a = coset_automaton("rho", pp).unwrap()
    assert _shape(a) == (2, {"a": 2, "rho": 1}) and not _covers_bouquet(a)
    a = coset_automaton("rho; a rho a", pp).unwrap()
    assert _shape(a) == (2, {"a": 2, "rho": 2}) and _covers_bouquet(a)
    a = coset_automaton("a", pp).unwrap()
    assert _shape(a) == (1, {"a": 1, "rho": 0})
    a = coset_automaton("a a a a a", pp).unwrap()
    assert _shape(a) == (5, {"a": 5, "rho": 0})
    assert all(a.act(v, "a a a a a") == v for v in a.vertices)
    a = coset_automaton((), pp).unwrap()
    assert _shape(a) == (1, {"a": 0, "rho": 0})
    a = coset_automaton("a a a a a' a' a' a'", pp).unwrap()
    assert _shape(a) == (5, {"a": 4, "rho": 0})
    assert a.act(a.root_init, "a a a a") is not None and a.act(a.root_init, "a'") is None
    for _, ys in SUITE[:7]:
        assert _agrees_with_oracle(ys, pp)
    assert conjugate("rho", "a rho a", pp) is not None
    assert conjugate("a", "rho", pp) is None


def criterion_2():
    report = coset_automaton(TORUS_Y, TORUS)
    a = report.unwrap()
    assert _shape(a) == (6, {"a": 4, "b": 4, "rho": 1})
    assert report.expansions_applied >= 2 and report.folds_applied >= 4
    # fold a; expand rho^2; fold rho; expand rho bl; fold b; fold a
    assert report.steps == (("fold", "a"), ("expand", "rho^2"), ("fold", "rho"),
                            ("expand", "rho bl"), ("fold", "b"), ("fold", "a"))
    assert _agrees_with_oracle(TORUS_Y, TORUS)


def criterion_3():
    a = coset_automaton("a; b; rho", WEDGE).unwrap()
    assert _shape(a) == (1, {"a": 1, "b": 1, "rho": 1}) and _covers_bouquet(a)
    a = coset_automaton("a; b", WEDGE).unwrap()
    assert _shape(a) == (1, {"a": 1, "b": 1, "rho": 0}) and not _covers_bouquet(a)
    assert _agrees_with_oracle("a; b; rho", WEDGE) and _agrees_with_oracle("a; b", WEDGE)


def criterion_4():
    rng = random.Random(4)
    for _ in range(500):
        pres = random_presentation(rng, max_x=2, max_p=1, max_bl=4)
        w, u, v = (random_word(rng, pres, 8) for _ in range(3))
        assert word_eq(w, w + w.invert() + w, pres)
        uu, vv = u + u.invert(), v + v.invert()
        assert word_eq(uu + vv, vv + uu, pres)
        assert (leq(u, w, pres) and leq(w, u, pres)) == word_eq(u, w, pres)
        for rho in pres.p_letters:
            r = pres.parse_word(rho)
            assert word_eq(r, r + pres.bl(rho), pres)
            assert is_idempotent(r, pres)


def criterion_5():
    rng = random.Random(5)
    yes = 0
    for _ in range(200):
        pres = random_presentation(rng, max_x=2, max_p=1, max_bl=4)
        ys = random_generators(rng, pres, max_count=3, max_len=6)
        g = flower(ys, pres)
        assert iso_rooted(saturate(g).unwrap(), generic_saturate(g).unwrap())
        # half the probes are built from the generators so YES actually occurs
        if ys and rng.random() < 0.5:
            w = rng.choice(ys) + random_word(rng, pres, 2)
        else:
            w = random_word(rng, pres, 6)
        if naive_member(w, ys, pres, len_bound=2) is Evidence.YES:
            yes += 1
            assert submonoid_member(w, ys, pres)
    assert yes > 0


def criterion_6():
    rng = random.Random(6)
    for _ in range(100):
        pres = random_presentation(rng, max_x=2, max_p=1, max_bl=4)
        ys = list(random_generators(rng, pres, max_count=3, max_len=6))
        code = canonical_code(coset_automaton(ys, pres).unwrap())
        variants = [ys[::-1], ys + ys[:1], [y.invert() for y in ys],
                    [y + y.invert() + y for y in ys]]
        shuffled = ys[:]
        rng.shuffle(shuffled)
        variants.append(shuffled)
        for ys2 in variants:
            assert canonical_code(coset_automaton(ys2, pres).unwrap()) == code


def criterion_7():
    for pres, ys in SUITE:
        c = coset_complex(ys, pres)
        stabs = [stabilizer(c, v) for v in range(c.n)]
        for s1 in stabs:
            for s2 in stabs:
                assert conjugator(s1, s2) is not None
        a = coset_automaton(ys, pres).unwrap()
        assert iso_rooted(graph_of_complex(c), a)
        assert isomorphism(complex_of_automaton(graph_of_complex(c)), c) == tuple(range(c.n))
        b = bouquet(pres)
        for v in range(c.n):
            found = immersions(c, b, v)
            assert len(found) == 1 and found[0].vertex_map == (0,) * c.n


def criterion_8():
    for pres, ys in SUITE:
        c = coset_complex(ys, pres)
        m = immersion(c, bouquet(pres), 0, 0)
        gc, gd = graph_of_complex(c), graph_of_complex(m.target)
        direct = all(set(gd.trans[0]) <= set(gc.trans[u]) for u in gc.vertices)
        assert is_covering(m) == direct
    sphere = coset_complex("rho; a rho a", PROJECTIVE)
    m = immersion(sphere, bouquet(PROJECTIVE), 0, 0)
    assert is_covering(m)
    lift = stabilizer(sphere, 0)
    base = stabilizer(bouquet(PROJECTIVE), 0)
    rng = random.Random(8)
    rho = PROJECTIVE.parse_word("rho")
    for i in range(20):
        w = random_word(rng, PROJECTIVE, 5, p_weight=0.3)
        e = w + w.invert() if i % 2 == 0 else w + rho + w.invert()
        assert is_idempotent(e, PROJECTIVE)
        assert base.member(e) and lift.member(e)


def criterion_9():
    rng = random.Random(9)
    cases = [TORUS.parse_words(TORUS_Y), TORUS.parse_words("rho"), TORUS.parse_words("a rho; b b")]
    for k in (1, 2, 3):
        pres2, tr = rebase_boundary(TORUS, "rho", k)
        for i in range(100):
            ys = cases[i % len(cases)]
            if rng.random() < 0.5:
                w = Word(())
                for _ in range(rng.randint(1, 3)):
                    y = rng.choice(ys)
                    w = w + (y if rng.random() < 0.5 else y.invert())
            else:
                w = random_word(rng, TORUS, 8, p_weight=0.25)
            assert submonoid_member(w, ys, TORUS) == submonoid_member(tr(w), tr.words(ys), pres2)


CRITERIA = {
    1: ("projective-plane suite", criterion_1),
    2: ("torus walkthrough", criterion_2),
    3: ("wedge example", criterion_3),
    4: ("word-problem laws on 500 random words", criterion_4),
    5: ("oracle equivalence on 200 random instances", criterion_5),
    6: ("coset automaton uniqueness on 100 random Y", criterion_6),
    7: ("classification invariants on suite complexes", criterion_7),
    8: ("covering criterion", criterion_8),
    9: ("boundary rebasing transfers membership", criterion_9),
}


def _clear_caches():
    for f in (stephen._schutzenberger, stephen._coset_automaton, oracle._generic_sa):
        f.cache_clear()


def _run(n: int, out=None) -> tuple[bool, float, str]:
    title, check = CRITERIA[n]
    _clear_caches()
    start = time.perf_counter()
    error = ""
    try:
        check()
        ok = True
    except AssertionError as exc:
        ok, error = False, f"assertion failed {exc}".strip()
    elapsed = time.perf_counter() - start
    if ok and elapsed >= TIME_LIMIT:
        ok, error = False, f"took {elapsed:.2f} s, limit {TIME_LIMIT:.0f} s"
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({elapsed:.3f} s) {title}"
    if error:
        line += f" -- {error}"
    print(line, file=out or sys.stdout)
    return ok, elapsed, error


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    with capsys.disabled():
        ok, _, error = _run(n, sys.stdout)
    assert ok, error


if __name__ == "__main__":
    results = [_run(n)[0] for n in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
