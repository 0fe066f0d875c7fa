"""Letters, words and presentations of the inverse monoid M(X, P).

M(X, P) = Inv< X u P | rho^2 = rho, rho = rho bl(rho) > where every
2-cell label ``rho`` carries a boundary label ``bl(rho)`` over X u X^-1.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    """Malformed textual input (words, presentations, complexes)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Kind(enum.Enum):
    X = "x"
    X_INV = "x'"
    P = "p"


@dataclass(frozen=True)
class Letter:
    name: str
    kind: Kind = Kind.X

    @property
    def is_p(self) -> bool:
        return self.kind is Kind.P

    @property
    def positive(self) -> bool:
        """True for x in X and for every P letter (those are self-inverse)."""
        return self.kind is not Kind.X_INV

    def inverse(self) -> "Letter":
        if self.kind is Kind.X:
            return Letter(self.name, Kind.X_INV)
        if self.kind is Kind.X_INV:
            return Letter(self.name, Kind.X)
        return self

    def __str__(self):
        return self.name + "'" if self.kind is Kind.X_INV else self.name

    def __repr__(self):
        return f"Letter({str(self)!r})"


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters; the empty word prints as ``1``."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __mul__(self, n: int) -> "Word":
        return Word(self.letters * n)

    def invert(self) -> "Word":
        return Word(tuple(l.inverse() for l in reversed(self.letters)))

    @property
    def has_p(self) -> bool:
        return any(l.is_p for l in self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "1"

    def __repr__(self):
        return f"Word({str(self)!r})"


EMPTY = Word()


def invert(w: Word) -> Word:
    return w.invert()


def concat(*words: Word) -> Word:
    return Word(tuple(l for w in words for l in w.letters))


@dataclass(frozen=True)
class Presentation:
    """Data (X, P, bl) defining M(X, P).

    ``cells`` is a tuple of ``(rho, bl(rho))`` pairs in declaration order; use
    :meth:`bl` for lookups.
    """

    x_letters: tuple[str, ...]
    cells: tuple[tuple[str, Word], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "x_letters", tuple(self.x_letters))
        object.__setattr__(self, "cells", tuple((r, w) for r, w in self.cells))
        names = list(self.x_letters) + [r for r, _ in self.cells]
        for name in names:
            if not IDENT.match(name):
                raise ParseError(f"bad identifier {name!r}")
        seen = set()
        for name in names:
            if name in seen:
                raise ParseError(f"duplicate identifier {name!r}")
            seen.add(name)
        xs = set(self.x_letters)
        for rho, word in self.cells:
            for l in word:
                if l.is_p:
                    raise ParseError(f"boundary label of {rho} contains 2-cell letter {l}")
                if l.name not in xs:
                    raise ParseError(f"boundary label of {rho} uses undeclared letter {l}")

    @classmethod
    def build(cls, x_letters: Iterable[str], cells: Mapping[str, str] | None = None) -> "Presentation":
        """Convenience constructor taking boundary labels as word text."""
        xs = tuple(x_letters)
        free = cls(xs)
        parsed = tuple((rho, free.parse_word(text)) for rho, text in (cells or {}).items())
        return cls(xs, parsed)

    @property
    def p_letters(self) -> tuple[str, ...]:
        return tuple(r for r, _ in self.cells)

    @cached_property
    def _bl(self) -> dict[str, Word]:
        return dict(self.cells)

    def bl(self, rho: str | Letter) -> Word:
        name = rho.name if isinstance(rho, Letter) else rho
        return self._bl[name]

    @cached_property
    def alphabet(self) -> tuple[Letter, ...]:
        """All letters in canonical order: x, x', y, y', ..., then P."""
        out = []
        for x in self.x_letters:
            out += [Letter(x, Kind.X), Letter(x, Kind.X_INV)]
        out += [Letter(r, Kind.P) for r in self.p_letters]
        return tuple(out)

    @cached_property
    def letter_rank(self) -> dict[Letter, int]:
        return {l: i for i, l in enumerate(self.alphabet)}

    @cached_property
    def inverse_rank(self) -> tuple[int, ...]:
        return tuple(self.letter_rank[l.inverse()] for l in self.alphabet)

    def ranks(self, w: Word) -> tuple[int, ...]:
        rank = self.letter_rank
        return tuple(rank[l] for l in w)

    def letter(self, token: str) -> Letter:
        name, inv = (token[:-1], True) if token.endswith("'") else (token, False)
        if name in self._bl:
            return Letter(name, Kind.P)
        if name in self.x_letters:
            return Letter(name, Kind.X_INV if inv else Kind.X)
        raise ParseError(f"undeclared letter {token!r}")

    def parse_word(self, text: str | Word) -> Word:
        if isinstance(text, Word):
            return text
        tokens = text.split()
        if tokens == ["1"]:
            return EMPTY
        return Word(tuple(self.letter(t) for t in tokens))

    def parse_words(self, text: str | Sequence) -> tuple[Word, ...]:
        """Parse ``"w1; w2; ..."`` (or a sequence of words) into a tuple."""
        if isinstance(text, str):
            parts = [p for p in text.split(";") if p.strip()]
        else:
            parts = list(text)
        return tuple(self.parse_word(p) for p in parts)

    def free(self) -> "Presentation":
        """Same generators, no 2-cells."""
        return Presentation(self.x_letters)

    def with_cell(self, rho: str, word: Word) -> "Presentation":
        cells = tuple((r, word if r == rho else w) for r, w in self.cells)
        return Presentation(self.x_letters, cells)

    def __str__(self):
        lines = ["letters: " + " ".join(self.x_letters)]
        lines += [f"cell {r}: {w}" for r, w in self.cells]
        return "\n".join(lines)


@dataclass(frozen=True)
class GroupPresentationText:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relators)
        return f"Gp< {' '.join(self.generators)} | {rels} >"


def group_image(pres: Presentation) -> GroupPresentationText:
    """Greatest group image G_{X,P} = Gp<X | bl(rho) = 1>."""
    return GroupPresentationText(pres.x_letters, tuple(w for _, w in pres.cells))
