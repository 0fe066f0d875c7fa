"""Seeded random presentations and words for experiments and tests."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Letter, Presentation, Word

X_NAMES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class SamplingConfig:
    """Size bounds for random instances; defaults match the oracle's desk scale."""

    seed: int = 0
    max_x: int = 2
    max_p: int = 1
    max_bl: int = 4
    max_gens: int = 3
    max_len: int = 6
    p_weight: float = 0.2

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def presentation(self, rng: random.Random) -> Presentation:
        return random_presentation(rng, self.max_x, self.max_p, self.max_bl)

    def word(self, rng: random.Random, pres: Presentation) -> Word:
        return random_word(rng, pres, self.max_len, p_weight=self.p_weight)

    def generators(self, rng: random.Random, pres: Presentation) -> tuple[Word, ...]:
        return tuple(self.word(rng, pres) for _ in range(rng.randint(0, self.max_gens)))


def random_presentation(rng: random.Random, max_x: int = 2, max_p: int = 1,
                        max_bl: int = 4) -> Presentation:
    xs = X_NAMES[:rng.randint(1, max_x)]
    cells = []
    for i in range(rng.randint(0, max_p)):
        bl = random_word(rng, Presentation(xs), rng.randint(0, max_bl), exact=True)
        cells.append((f"rho{i}" if i else "rho", bl))
    return Presentation(xs, tuple(cells))


def random_word(rng: random.Random, pres: Presentation, max_len: int,
                exact: bool = False, p_weight: float = 0.2) -> Word:
    """Uniform-ish word; P letters drawn with probability ``p_weight``."""
    n = max_len if exact else rng.randint(0, max_len)
    xs = [l for l in pres.alphabet if not l.is_p]
    ps = [l for l in pres.alphabet if l.is_p]
    out: list[Letter] = []
    for _ in range(n):
        if ps and rng.random() < p_weight:
            out.append(rng.choice(ps))
        elif xs:
            out.append(rng.choice(xs))
    return Word(tuple(out))


def random_generators(rng: random.Random, pres: Presentation, max_count: int = 3,
                      max_len: int = 6) -> tuple[Word, ...]:
    return tuple(random_word(rng, pres, max_len) for _ in range(rng.randint(0, max_count)))
